#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace sfgloc {

enum class NodeKind {
    // declarations / statements
    MethodDecl,
    Param,
    Block,
    VarDecl,
    Assign,
    If,
    While,
    DoWhile,
    For,
    Foreach,
    Switch,
    SwitchCase,
    Break,
    Continue,
    Return,
    ExprStmt,
    // expressions
    Name,
    Literal,
    Binary,
    Unary,
    Call,
    FieldAccess,
    ArrayAccess,
    Cast,
    New,
};

struct Span {
    int line = 0;
    int col = 0;
    int end_line = 0;
    int end_col = 0;
    std::size_t offset = 0;     // byte offset of the first token
    std::size_t end_offset = 0; // one past the last token
};

// Single tagged node type; only the slots relevant to `kind` are populated.
// Every non-root node has exactly one parent, set by the parser.
struct Node {
    NodeKind kind;
    Span span;
    Node* parent = nullptr;
    int id = -1; // dense, assigned in creation order

    std::string name;      // identifier: Name, Param, VarDecl, Foreach var,
                           // FieldAccess field, Call via bare name, MethodDecl
    std::string type_name; // declared/cast/new type text, [] suffixes included
    std::string op;        // Assign ("=", "+=", ...), Binary, Unary operator text
    std::string literal;   // Literal token text
    bool prefix = false;   // Unary: prefix vs postfix

    Node* init = nullptr;    // VarDecl initializer; For init statement
    Node* cond = nullptr;    // If/While/DoWhile/For condition; Switch selector
    Node* update = nullptr;  // For update expression
    Node* body = nullptr;    // loop/method/foreach body (Block)
    Node* then_branch = nullptr;
    Node* else_branch = nullptr;
    Node* lhs = nullptr;     // Assign target, Binary left
    Node* rhs = nullptr;     // Assign value, Binary right
    Node* operand = nullptr; // Unary, Cast, Return value, ExprStmt expression
    Node* target = nullptr;  // Call callee, FieldAccess/ArrayAccess target
    Node* index = nullptr;   // ArrayAccess index
    Node* source = nullptr;  // Foreach iterable expression
    Node* label = nullptr;   // SwitchCase label (null = default arm)

    std::vector<Node*> stmts;  // Block statements; Switch case arms
    std::vector<Node*> args;   // Call/New arguments; MethodDecl params

    // filled by resolve_types
    Node* decl = nullptr; // Name -> declaring Param/VarDecl/Foreach
    int var_type = -1;    // VarType index of the variable at this node
};

class Ast {
public:
    Ast() = default;
    Ast(Ast&&) = default;
    Ast& operator=(Ast&&) = default;

    Node* make(NodeKind kind) {
        arena_.push_back(std::make_unique<Node>());
        Node* n = arena_.back().get();
        n->kind = kind;
        n->id = static_cast<int>(arena_.size()) - 1;
        return n;
    }

    Node* root = nullptr; // MethodDecl
    const std::vector<std::unique_ptr<Node>>& nodes() const { return arena_; }

private:
    std::vector<std::unique_ptr<Node>> arena_;
};

const char* node_kind_name(NodeKind k);

// Indented one-node-per-line dump used by `sfgloc parse --emit-ast`.
std::string print_ast(const Ast& ast);

// Canonical source text for the method; parsing it again yields a
// structurally equal tree (round-trip property).
std::string print_source(const Ast& ast);

// Structural equality ignoring spans and node ids.
bool ast_equal(const Ast& a, const Ast& b);

// Pre-order walk over the whole method.
void walk(Node* n, const std::function<void(Node*)>& fn);

} // namespace sfgloc
