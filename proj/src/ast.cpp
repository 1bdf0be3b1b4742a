#include "sfgloc/ast.hpp"

#include <sstream>

namespace sfgloc {

const char* node_kind_name(NodeKind k) {
    switch (k) {
    case NodeKind::MethodDecl: return "MethodDecl";
    case NodeKind::Param: return "Param";
    case NodeKind::Block: return "Block";
    case NodeKind::VarDecl: return "VarDecl";
    case NodeKind::Assign: return "Assign";
    case NodeKind::If: return "If";
    case NodeKind::While: return "While";
    case NodeKind::DoWhile: return "DoWhile";
    case NodeKind::For: return "For";
    case NodeKind::Foreach: return "Foreach";
    case NodeKind::Switch: return "Switch";
    case NodeKind::SwitchCase: return "SwitchCase";
    case NodeKind::Break: return "Break";
    case NodeKind::Continue: return "Continue";
    case NodeKind::Return: return "Return";
    case NodeKind::ExprStmt: return "ExprStmt";
    case NodeKind::Name: return "Name";
    case NodeKind::Literal: return "Literal";
    case NodeKind::Binary: return "Binary";
    case NodeKind::Unary: return "Unary";
    case NodeKind::Call: return "Call";
    case NodeKind::FieldAccess: return "FieldAccess";
    case NodeKind::ArrayAccess: return "ArrayAccess";
    case NodeKind::Cast: return "Cast";
    case NodeKind::New: return "New";
    }
    return "?";
}

namespace {

void for_each_child(const Node* n, const std::function<void(Node*)>& fn) {
    auto visit = [&](Node* c) {
        if (c != nullptr)
            fn(c);
    };
    for (Node* p : n->args)
        visit(p);
    visit(n->init);
    visit(n->cond);
    visit(n->update);
    visit(n->lhs);
    visit(n->rhs);
    visit(n->operand);
    visit(n->target);
    visit(n->index);
    visit(n->source);
    visit(n->label);
    visit(n->then_branch);
    visit(n->else_branch);
    visit(n->body);
    for (Node* s : n->stmts)
        visit(s);
}

void dump(const Node* n, int depth, std::ostringstream& out) {
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << node_kind_name(n->kind);
    if (!n->name.empty())
        out << " name=" << n->name;
    if (!n->type_name.empty())
        out << " type=" << n->type_name;
    if (!n->op.empty())
        out << " op=" << n->op;
    if (!n->literal.empty())
        out << " lit=" << n->literal;
    out << " @" << n->span.line << ":" << n->span.col << "\n";
    for_each_child(n, [&](Node* c) { dump(c, depth + 1, out); });
}

void expr_src(const Node* n, std::ostringstream& out);

void call_args_src(const Node* n, std::ostringstream& out) {
    out << "(";
    for (std::size_t i = 0; i < n->args.size(); ++i) {
        if (i > 0)
            out << ", ";
        expr_src(n->args[i], out);
    }
    out << ")";
}

void expr_src(const Node* n, std::ostringstream& out) {
    switch (n->kind) {
    case NodeKind::Name:
        out << n->name;
        break;
    case NodeKind::Literal:
        out << n->literal;
        break;
    case NodeKind::Binary:
        out << "(";
        expr_src(n->lhs, out);
        out << " " << n->op << " ";
        expr_src(n->rhs, out);
        out << ")";
        break;
    case NodeKind::Unary:
        if (n->prefix) {
            out << n->op;
            expr_src(n->operand, out);
        } else {
            expr_src(n->operand, out);
            out << n->op;
        }
        break;
    case NodeKind::Call:
        expr_src(n->target, out);
        call_args_src(n, out);
        break;
    case NodeKind::FieldAccess:
        expr_src(n->target, out);
        out << "." << n->name;
        break;
    case NodeKind::ArrayAccess:
        expr_src(n->target, out);
        out << "[";
        expr_src(n->index, out);
        out << "]";
        break;
    case NodeKind::Cast:
        out << "(" << n->type_name << ") ";
        expr_src(n->operand, out);
        break;
    case NodeKind::New:
        out << "new " << n->type_name;
        call_args_src(n, out);
        break;
    default:
        out << "/*?*/";
        break;
    }
}

void stmt_src(const Node* n, int depth, std::ostringstream& out);

void block_src(const Node* n, int depth, std::ostringstream& out) {
    out << "{\n";
    for (const Node* s : n->stmts)
        stmt_src(s, depth + 1, out);
    out << std::string(static_cast<std::size_t>(depth) * 2, ' ') << "}";
}

void stmt_src(const Node* n, int depth, std::ostringstream& out) {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out << pad;
    switch (n->kind) {
    case NodeKind::VarDecl:
        out << n->type_name << " " << n->name;
        if (n->init != nullptr) {
            out << " = ";
            expr_src(n->init, out);
        }
        out << ";\n";
        break;
    case NodeKind::Assign:
        expr_src(n->lhs, out);
        out << " " << n->op << " ";
        expr_src(n->rhs, out);
        out << ";\n";
        break;
    case NodeKind::ExprStmt:
        expr_src(n->operand, out);
        out << ";\n";
        break;
    case NodeKind::If:
        out << "if (";
        expr_src(n->cond, out);
        out << ") ";
        block_src(n->then_branch, depth, out);
        if (n->else_branch != nullptr) {
            out << " else ";
            block_src(n->else_branch, depth, out);
        }
        out << "\n";
        break;
    case NodeKind::While:
        out << "while (";
        expr_src(n->cond, out);
        out << ") ";
        block_src(n->body, depth, out);
        out << "\n";
        break;
    case NodeKind::DoWhile:
        out << "do ";
        block_src(n->body, depth, out);
        out << " while (";
        expr_src(n->cond, out);
        out << ");\n";
        break;
    case NodeKind::For:
        out << "for (";
        if (n->init != nullptr) {
            std::ostringstream tmp;
            stmt_src(n->init, 0, tmp);
            std::string s = tmp.str();
            while (!s.empty() && (s.back() == '\n'))
                s.pop_back();
            out << s;
        } else {
            out << ";";
        }
        out << " ";
        if (n->cond != nullptr)
            expr_src(n->cond, out);
        out << "; ";
        if (n->update != nullptr)
            expr_src(n->update, out);
        out << ") ";
        block_src(n->body, depth, out);
        out << "\n";
        break;
    case NodeKind::Foreach:
        out << "for (" << n->type_name << " " << n->name << " : ";
        expr_src(n->source, out);
        out << ") ";
        block_src(n->body, depth, out);
        out << "\n";
        break;
    case NodeKind::Switch:
        out << "switch (";
        expr_src(n->cond, out);
        out << ") {\n";
        for (const Node* arm : n->stmts) {
            out << std::string((static_cast<std::size_t>(depth) + 1) * 2, ' ');
            if (arm->label != nullptr) {
                out << "case ";
                expr_src(arm->label, out);
                out << ":\n";
            } else {
                out << "default:\n";
            }
            for (const Node* s : arm->stmts)
                stmt_src(s, depth + 2, out);
        }
        out << pad << "}\n";
        break;
    case NodeKind::Break:
        out << "break;\n";
        break;
    case NodeKind::Continue:
        out << "continue;\n";
        break;
    case NodeKind::Return:
        out << "return";
        if (n->operand != nullptr) {
            out << " ";
            expr_src(n->operand, out);
        }
        out << ";\n";
        break;
    default:
        out << "/*?*/;\n";
        break;
    }
}

bool node_equal(const Node* a, const Node* b) {
    if (a == nullptr || b == nullptr)
        return a == b;
    if (a->kind != b->kind || a->name != b->name || a->type_name != b->type_name ||
        a->op != b->op || a->literal != b->literal || a->prefix != b->prefix)
        return false;
    if (a->args.size() != b->args.size() || a->stmts.size() != b->stmts.size())
        return false;
    for (std::size_t i = 0; i < a->args.size(); ++i)
        if (!node_equal(a->args[i], b->args[i]))
            return false;
    for (std::size_t i = 0; i < a->stmts.size(); ++i)
        if (!node_equal(a->stmts[i], b->stmts[i]))
            return false;
    return node_equal(a->init, b->init) && node_equal(a->cond, b->cond) &&
           node_equal(a->update, b->update) && node_equal(a->body, b->body) &&
           node_equal(a->then_branch, b->then_branch) && node_equal(a->else_branch, b->else_branch) &&
           node_equal(a->lhs, b->lhs) && node_equal(a->rhs, b->rhs) &&
           node_equal(a->operand, b->operand) && node_equal(a->target, b->target) &&
           node_equal(a->index, b->index) && node_equal(a->source, b->source) &&
           node_equal(a->label, b->label);
}

} // namespace

void walk(Node* n, const std::function<void(Node*)>& fn) {
    if (n == nullptr)
        return;
    fn(n);
    for_each_child(n, [&](Node* c) { walk(c, fn); });
}

std::string print_ast(const Ast& ast) {
    std::ostringstream out;
    if (ast.root != nullptr)
        dump(ast.root, 0, out);
    return out.str();
}

std::string print_source(const Ast& ast) {
    std::ostringstream out;
    const Node* m = ast.root;
    out << m->type_name << " " << m->name << "(";
    for (std::size_t i = 0; i < m->args.size(); ++i) {
        if (i > 0)
            out << ", ";
        out << m->args[i]->type_name << " " << m->args[i]->name;
    }
    out << ") ";
    block_src(m->body, 0, out);
    out << "\n";
    return out.str();
}

bool ast_equal(const Ast& a, const Ast& b) {
    return node_equal(a.root, b.root);
}

} // namespace sfgloc
