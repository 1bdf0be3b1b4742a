#include "sfgloc/parser.hpp"

#include "sfgloc/errors.hpp"
#include "sfgloc/lexer.hpp"

#include <unordered_set>

namespace sfgloc {

namespace {

const std::unordered_set<std::string> kPrimitiveTypes = {
    "void", "byte", "short", "int", "long", "float", "double", "boolean", "char"};

const std::unordered_set<std::string> kModifiers = {
    "public", "private", "protected", "static", "final"};

const std::unordered_set<std::string> kUnsupportedKeywords = {
    "try", "catch", "finally", "throw", "synchronized", "this"};

class Parser {
public:
    explicit Parser(const TokenStream& ts) : toks_(ts.tokens) {}

    Ast parse() {
        Ast ast;
        ast_ = &ast;
        ast.root = parse_method_decl();
        if (!at_end())
            throw ParseError("trailing tokens after method", cur().line, cur().col);
        // Establish parent links in a single pass.
        set_parents(ast.root);
        return ast;
    }

private:
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;
    Ast* ast_ = nullptr;

    const Token& cur() const { return toks_[pos_]; }
    const Token& peek(std::size_t n = 1) const {
        std::size_t i = pos_ + n;
        return i < toks_.size() ? toks_[i] : toks_.back();
    }
    bool at_end() const { return cur().kind == TokenKind::EndOfFile; }

    bool check(const char* text) const { return !at_end() && cur().text == text; }
    bool check_kind(TokenKind k) const { return cur().kind == k; }

    const Token& advance() { return toks_[pos_++]; }

    bool match(const char* text) {
        if (check(text)) {
            ++pos_;
            return true;
        }
        return false;
    }

    const Token& expect(const char* text, const char* what) {
        if (!check(text))
            throw ParseError(std::string("expected '") + text + "' in " + what, cur().line,
                             cur().col);
        return advance();
    }

    [[noreturn]] void unsupported(const std::string& what) const {
        throw UnsupportedConstruct(what, cur().line, cur().col);
    }

    Node* make(NodeKind k, const Token& begin) {
        Node* n = ast_->make(k);
        n->span.line = begin.line;
        n->span.col = begin.col;
        n->span.offset = begin.offset;
        return n;
    }

    void close_span(Node* n) {
        const Token& prev = toks_[pos_ > 0 ? pos_ - 1 : 0];
        n->span.end_line = prev.line;
        n->span.end_col = prev.col + static_cast<int>(prev.text.size());
        n->span.end_offset = prev.offset + prev.text.size();
    }

    static void set_parents(Node* root) {
        walk(root, [](Node* n) {
            auto claim = [&](Node* c) {
                if (c != nullptr)
                    c->parent = n;
            };
            for (Node* p : n->args)
                claim(p);
            claim(n->init);
            claim(n->cond);
            claim(n->update);
            claim(n->lhs);
            claim(n->rhs);
            claim(n->operand);
            claim(n->target);
            claim(n->index);
            claim(n->source);
            claim(n->label);
            claim(n->then_branch);
            claim(n->else_branch);
            claim(n->body);
            for (Node* s : n->stmts)
                claim(s);
        });
    }

    bool is_type_start() const {
        if (cur().kind == TokenKind::Keyword && kPrimitiveTypes.count(cur().text) > 0)
            return true;
        return cur().kind == TokenKind::Identifier;
    }

    // Parses "int", "Foo", "int[]", "List"; rejects generic arguments.
    std::string parse_type_name() {
        if (!is_type_start())
            throw ParseError("expected type name", cur().line, cur().col);
        std::string t = advance().text;
        if (check("<"))
            unsupported("generic type arguments (only raw List/Map/Set are supported)");
        while (check("[")) {
            advance();
            expect("]", "array type");
            t += "[]";
        }
        return t;
    }

    Node* parse_method_decl() {
        while (cur().kind == TokenKind::Keyword && kModifiers.count(cur().text) > 0)
            advance();
        const Token& begin = cur();
        std::string ret = parse_type_name();
        if (cur().kind != TokenKind::Identifier)
            throw ParseError("expected method name", cur().line, cur().col);
        Node* m = make(NodeKind::MethodDecl, begin);
        m->type_name = ret;
        m->name = advance().text;
        expect("(", "method declaration");
        if (!check(")")) {
            do {
                const Token& pbegin = cur();
                Node* p = make(NodeKind::Param, pbegin);
                p->type_name = parse_type_name();
                if (cur().kind != TokenKind::Identifier)
                    throw ParseError("expected parameter name", cur().line, cur().col);
                const Token& nameTok = cur();
                p->name = advance().text;
                p->span.line = nameTok.line;
                p->span.col = nameTok.col;
                p->span.offset = nameTok.offset;
                close_span(p);
                m->args.push_back(p);
            } while (match(","));
        }
        expect(")", "method declaration");
        if (check("throws"))
            unsupported("throws clause");
        m->body = parse_block();
        close_span(m);
        return m;
    }

    Node* parse_block() {
        const Token& begin = cur();
        expect("{", "block");
        Node* b = make(NodeKind::Block, begin);
        while (!check("}")) {
            if (at_end())
                throw ParseError("unterminated block", cur().line, cur().col);
            b->stmts.push_back(parse_statement());
        }
        expect("}", "block");
        close_span(b);
        return b;
    }

    // A single statement wrapped into a Block when braces are omitted, so
    // branches are uniformly blocks.
    Node* parse_branch() {
        if (check("{"))
            return parse_block();
        const Token& begin = cur();
        Node* b = make(NodeKind::Block, begin);
        b->stmts.push_back(parse_statement());
        close_span(b);
        return b;
    }

    bool looks_like_var_decl() const {
        // primitive type always starts a declaration
        if (cur().kind == TokenKind::Keyword && kPrimitiveTypes.count(cur().text) > 0)
            return true;
        if (cur().kind != TokenKind::Identifier)
            return false;
        // "Foo x" | "Foo[] x"
        if (peek().kind == TokenKind::Identifier)
            return true;
        if (peek().text == "[" && peek(2).text == "]")
            return true;
        return false;
    }

    Node* parse_statement() {
        const Token& begin = cur();
        if (cur().kind == TokenKind::Keyword) {
            const std::string& kw = cur().text;
            if (kUnsupportedKeywords.count(kw) > 0)
                unsupported(kw + " statement");
            if (kw == "if")
                return parse_if();
            if (kw == "while")
                return parse_while();
            if (kw == "do")
                return parse_do_while();
            if (kw == "for")
                return parse_for();
            if (kw == "switch")
                return parse_switch();
            if (kw == "break") {
                advance();
                if (cur().kind == TokenKind::Identifier)
                    unsupported("labeled break");
                Node* n = make(NodeKind::Break, begin);
                expect(";", "break statement");
                close_span(n);
                return n;
            }
            if (kw == "continue") {
                advance();
                if (cur().kind == TokenKind::Identifier)
                    unsupported("labeled continue");
                Node* n = make(NodeKind::Continue, begin);
                expect(";", "continue statement");
                close_span(n);
                return n;
            }
            if (kw == "return") {
                advance();
                Node* n = make(NodeKind::Return, begin);
                if (!check(";"))
                    n->operand = parse_expression();
                expect(";", "return statement");
                close_span(n);
                return n;
            }
        }
        if (check("{"))
            return parse_block();
        if (cur().kind == TokenKind::Identifier && peek().text == ":")
            unsupported("labeled statement");
        if (looks_like_var_decl()) {
            Node* d = parse_var_decl();
            expect(";", "variable declaration");
            close_span(d);
            return d;
        }
        Node* s = parse_expr_statement();
        expect(";", "statement");
        close_span(s);
        return s;
    }

    Node* parse_var_decl() {
        const Token& begin = cur();
        std::string type = parse_type_name();
        if (cur().kind != TokenKind::Identifier)
            throw ParseError("expected variable name", cur().line, cur().col);
        const Token& nameTok = cur();
        Node* d = make(NodeKind::VarDecl, begin);
        d->type_name = type;
        d->name = advance().text;
        d->span.line = nameTok.line;
        d->span.col = nameTok.col;
        d->span.offset = nameTok.offset;
        if (match("="))
            d->init = parse_expression();
        if (check(","))
            unsupported("multiple declarators in one statement");
        return d;
    }

    bool is_assign_op(const std::string& t) const {
        return t == "=" || t == "+=" || t == "-=" || t == "*=" || t == "/=" || t == "%=" ||
               t == "&=" || t == "|=" || t == "^=";
    }

    // Assignment, call, or ++/-- used as a statement (without the trailing ';').
    Node* parse_expr_statement() {
        const Token& begin = cur();
        Node* e = parse_expression();
        if (!at_end() && cur().kind == TokenKind::Operator && is_assign_op(cur().text)) {
            if (e->kind != NodeKind::Name && e->kind != NodeKind::FieldAccess &&
                e->kind != NodeKind::ArrayAccess)
                throw ParseError("invalid assignment target", cur().line, cur().col);
            Node* a = make(NodeKind::Assign, begin);
            a->op = advance().text;
            a->lhs = e;
            a->rhs = parse_expression();
            return a;
        }
        if (e->kind == NodeKind::Call ||
            (e->kind == NodeKind::Unary && (e->op == "++" || e->op == "--"))) {
            Node* s = make(NodeKind::ExprStmt, begin);
            s->operand = e;
            return s;
        }
        throw ParseError("expression is not a statement", begin.line, begin.col);
    }

    Node* parse_if() {
        const Token& begin = advance(); // 'if'
        Node* n = make(NodeKind::If, begin);
        expect("(", "if condition");
        n->cond = parse_expression();
        expect(")", "if condition");
        n->then_branch = parse_branch();
        if (match("else")) {
            if (check("if")) {
                // else-if chains become a nested If inside an implicit block
                const Token& ebegin = cur();
                Node* blk = make(NodeKind::Block, ebegin);
                blk->stmts.push_back(parse_if());
                close_span(blk);
                n->else_branch = blk;
            } else {
                n->else_branch = parse_branch();
            }
        }
        close_span(n);
        return n;
    }

    Node* parse_while() {
        const Token& begin = advance();
        Node* n = make(NodeKind::While, begin);
        expect("(", "while condition");
        n->cond = parse_expression();
        expect(")", "while condition");
        n->body = parse_branch();
        close_span(n);
        return n;
    }

    Node* parse_do_while() {
        const Token& begin = advance();
        Node* n = make(NodeKind::DoWhile, begin);
        n->body = parse_branch();
        if (!match("while"))
            throw ParseError("expected 'while' after do body", cur().line, cur().col);
        expect("(", "do-while condition");
        n->cond = parse_expression();
        expect(")", "do-while condition");
        expect(";", "do-while statement");
        close_span(n);
        return n;
    }

    Node* parse_for() {
        const Token& begin = advance();
        expect("(", "for header");
        // foreach: "for (Type name : expr)"
        if (is_type_start()) {
            std::size_t save = pos_;
            bool foreach_form = false;
            if (cur().kind == TokenKind::Keyword || cur().kind == TokenKind::Identifier) {
                std::size_t j = pos_ + 1;
                while (j + 1 < toks_.size() && toks_[j].text == "[" && toks_[j + 1].text == "]")
                    j += 2;
                if (j + 1 < toks_.size() && toks_[j].kind == TokenKind::Identifier &&
                    toks_[j + 1].text == ":")
                    foreach_form = true;
            }
            if (foreach_form) {
                Node* n = make(NodeKind::Foreach, begin);
                n->type_name = parse_type_name();
                const Token& nameTok = cur();
                n->name = advance().text;
                n->span.line = nameTok.line; // anchor at the loop variable
                n->span.col = nameTok.col;
                n->span.offset = nameTok.offset;
                expect(":", "foreach header");
                n->source = parse_expression();
                expect(")", "foreach header");
                n->body = parse_branch();
                close_span(n);
                return n;
            }
            pos_ = save;
        }
        Node* n = make(NodeKind::For, begin);
        if (!check(";")) {
            if (looks_like_var_decl())
                n->init = parse_var_decl();
            else
                n->init = parse_expr_statement();
            close_span(n->init);
        }
        expect(";", "for header");
        if (!check(";"))
            n->cond = parse_expression();
        expect(";", "for header");
        if (!check(")"))
            n->update = parse_update_expr();
        expect(")", "for header");
        n->body = parse_branch();
        close_span(n);
        return n;
    }

    // For-update: "i++", "--i", or "i = i + 1" (as an Assign expression node).
    Node* parse_update_expr() {
        const Token& begin = cur();
        Node* e = parse_expression();
        if (!at_end() && cur().kind == TokenKind::Operator && is_assign_op(cur().text)) {
            Node* a = make(NodeKind::Assign, begin);
            a->op = advance().text;
            a->lhs = e;
            a->rhs = parse_expression();
            return a;
        }
        return e;
    }

    Node* parse_switch() {
        const Token& begin = advance();
        Node* n = make(NodeKind::Switch, begin);
        expect("(", "switch selector");
        n->cond = parse_expression();
        expect(")", "switch selector");
        expect("{", "switch body");
        while (!check("}")) {
            if (at_end())
                throw ParseError("unterminated switch", cur().line, cur().col);
            const Token& cbegin = cur();
            Node* arm = make(NodeKind::SwitchCase, cbegin);
            if (match("case")) {
                arm->label = parse_expression();
            } else if (match("default")) {
                arm->label = nullptr;
            } else {
                throw ParseError("expected 'case' or 'default'", cur().line, cur().col);
            }
            if (check("->"))
                unsupported("switch arrow arm");
            expect(":", "switch case");
            while (!check("case") && !check("default") && !check("}"))
                arm->stmts.push_back(parse_statement());
            close_span(arm);
            n->stmts.push_back(arm);
        }
        expect("}", "switch body");
        close_span(n);
        return n;
    }

    // ---- expressions ----

    Node* parse_expression() { return parse_or(); }

    Node* binary_chain(Node* (Parser::*next)(), std::initializer_list<const char*> ops) {
        const Token& begin = cur();
        Node* lhs = (this->*next)();
        for (;;) {
            bool matched = false;
            for (const char* op : ops) {
                if (check(op)) {
                    Node* b = make(NodeKind::Binary, begin);
                    b->op = advance().text;
                    b->lhs = lhs;
                    b->rhs = (this->*next)();
                    close_span(b);
                    lhs = b;
                    matched = true;
                    break;
                }
            }
            if (!matched)
                return lhs;
        }
    }

    Node* parse_or() {
        Node* e = binary_chain(&Parser::parse_and, {"||"});
        if (check("?"))
            unsupported("ternary conditional");
        return e;
    }
    Node* parse_and() { return binary_chain(&Parser::parse_bit_or, {"&&"}); }
    Node* parse_bit_or() { return binary_chain(&Parser::parse_bit_xor, {"|"}); }
    Node* parse_bit_xor() { return binary_chain(&Parser::parse_bit_and, {"^"}); }
    Node* parse_bit_and() { return binary_chain(&Parser::parse_equality, {"&"}); }
    Node* parse_equality() { return binary_chain(&Parser::parse_relational, {"==", "!="}); }
    Node* parse_relational() { return binary_chain(&Parser::parse_shift, {"<", ">", "<=", ">="}); }
    Node* parse_shift() { return binary_chain(&Parser::parse_additive, {"<<", ">>"}); }
    Node* parse_additive() { return binary_chain(&Parser::parse_multiplicative, {"+", "-"}); }
    Node* parse_multiplicative() { return binary_chain(&Parser::parse_unary, {"*", "/", "%"}); }

    bool looks_like_cast() const {
        if (!check("("))
            return false;
        std::size_t j = pos_ + 1;
        if (j >= toks_.size())
            return false;
        const Token& t = toks_[j];
        bool is_type = (t.kind == TokenKind::Keyword && kPrimitiveTypes.count(t.text) > 0) ||
                       t.kind == TokenKind::Identifier;
        if (!is_type)
            return false;
        ++j;
        while (j + 1 < toks_.size() && toks_[j].text == "[" && toks_[j + 1].text == "]")
            j += 2;
        if (j >= toks_.size() || toks_[j].text != ")")
            return false;
        if (j + 1 >= toks_.size())
            return false;
        const Token& after = toks_[j + 1];
        // "(a) + b" is arithmetic, "(Foo) x" is a cast
        return after.kind == TokenKind::Identifier || after.kind == TokenKind::Literal ||
               after.text == "(" || after.text == "!" || after.text == "~" ||
               (t.kind == TokenKind::Keyword && (after.text == "-" || after.text == "+"));
    }

    Node* parse_unary() {
        const Token& begin = cur();
        if (check("!") || check("~") || check("-") || check("+") || check("++") || check("--")) {
            Node* u = make(NodeKind::Unary, begin);
            u->op = advance().text;
            u->prefix = true;
            u->operand = parse_unary();
            close_span(u);
            return u;
        }
        if (looks_like_cast()) {
            Node* c = make(NodeKind::Cast, begin);
            advance(); // '('
            c->type_name = parse_type_name();
            expect(")", "cast");
            c->operand = parse_unary();
            close_span(c);
            return c;
        }
        return parse_postfix();
    }

    Node* parse_postfix() {
        const Token& begin = cur();
        Node* e = parse_primary();
        for (;;) {
            if (check("(")) {
                if (e->kind != NodeKind::Name && e->kind != NodeKind::FieldAccess)
                    throw ParseError("call target must be a name or field access", cur().line,
                                     cur().col);
                Node* call = make(NodeKind::Call, begin);
                call->target = e;
                advance();
                if (!check(")")) {
                    do {
                        call->args.push_back(parse_expression());
                    } while (match(","));
                }
                expect(")", "call arguments");
                close_span(call);
                e = call;
            } else if (check(".")) {
                advance();
                if (cur().kind != TokenKind::Identifier)
                    throw ParseError("expected field or method name after '.'", cur().line,
                                     cur().col);
                Node* fa = make(NodeKind::FieldAccess, begin);
                fa->target = e;
                fa->name = advance().text;
                close_span(fa);
                e = fa;
            } else if (check("[")) {
                advance();
                Node* aa = make(NodeKind::ArrayAccess, begin);
                aa->target = e;
                aa->index = parse_expression();
                expect("]", "array access");
                close_span(aa);
                e = aa;
            } else if (check("++") || check("--")) {
                Node* u = make(NodeKind::Unary, begin);
                u->op = advance().text;
                u->prefix = false;
                u->operand = e;
                close_span(u);
                e = u;
            } else {
                return e;
            }
        }
    }

    Node* parse_primary() {
        const Token& begin = cur();
        if (check("(")) {
            advance();
            Node* e = parse_expression();
            expect(")", "parenthesized expression");
            return e;
        }
        if (begin.kind == TokenKind::Literal) {
            Node* l = make(NodeKind::Literal, begin);
            l->literal = advance().text;
            close_span(l);
            return l;
        }
        if (check("new")) {
            advance();
            Node* n = make(NodeKind::New, begin);
            n->type_name = parse_type_name();
            if (check("["))
                unsupported("array creation expression");
            expect("(", "constructor call");
            if (!check(")")) {
                do {
                    n->args.push_back(parse_expression());
                } while (match(","));
            }
            expect(")", "constructor call");
            close_span(n);
            return n;
        }
        if (begin.kind == TokenKind::Identifier) {
            Node* nm = make(NodeKind::Name, begin);
            nm->name = advance().text;
            close_span(nm);
            return nm;
        }
        if (begin.kind == TokenKind::Keyword && kUnsupportedKeywords.count(begin.text) > 0)
            unsupported(begin.text + " expression");
        throw ParseError("expected expression", begin.line, begin.col);
    }
};

} // namespace

Ast parse_method(const TokenStream& tokens) {
    if (tokens.tokens.empty() || tokens.tokens.front().kind == TokenKind::EndOfFile)
        throw ParseError("empty input", 1, 1);
    Parser p(tokens);
    return p.parse();
}

Ast parse_method_source(const std::string& source) {
    return parse_method(tokenize(source));
}

} // namespace sfgloc
