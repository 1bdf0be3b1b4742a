#include "sfgloc/types.hpp"

#include "sfgloc/errors.hpp"

#include <unordered_map>
#include <vector>

namespace sfgloc {

const char* var_type_name(VarType t) {
    switch (t) {
    case VarType::Byte: return "byte";
    case VarType::Short: return "short";
    case VarType::Int: return "int";
    case VarType::Long: return "long";
    case VarType::Float: return "float";
    case VarType::Double: return "double";
    case VarType::Boolean: return "boolean";
    case VarType::Char: return "char";
    case VarType::String: return "String";
    case VarType::BoxedInteger: return "Integer";
    case VarType::BoxedLong: return "Long";
    case VarType::BoxedDouble: return "Double";
    case VarType::BoxedBoolean: return "Boolean";
    case VarType::BoxedCharacter: return "Character";
    case VarType::Object: return "Object";
    case VarType::List: return "List";
    case VarType::Map: return "Map";
    case VarType::Set: return "Set";
    case VarType::Array: return "Array";
    case VarType::UserDefined: return "UserDefined";
    }
    return "?";
}

const std::array<VarType, kVarTypeCount>& all_var_types() {
    static const std::array<VarType, kVarTypeCount> all = {
        VarType::Byte,         VarType::Short,        VarType::Int,
        VarType::Long,         VarType::Float,        VarType::Double,
        VarType::Boolean,      VarType::Char,         VarType::String,
        VarType::BoxedInteger, VarType::BoxedLong,    VarType::BoxedDouble,
        VarType::BoxedBoolean, VarType::BoxedCharacter, VarType::Object,
        VarType::List,         VarType::Map,          VarType::Set,
        VarType::Array,        VarType::UserDefined,
    };
    return all;
}

VarType var_type_from_source(const std::string& type_name) {
    if (type_name.find("[]") != std::string::npos)
        return VarType::Array;
    static const std::unordered_map<std::string, VarType> table = {
        {"byte", VarType::Byte},         {"short", VarType::Short},
        {"int", VarType::Int},           {"long", VarType::Long},
        {"float", VarType::Float},       {"double", VarType::Double},
        {"boolean", VarType::Boolean},   {"char", VarType::Char},
        {"String", VarType::String},     {"Integer", VarType::BoxedInteger},
        {"Long", VarType::BoxedLong},    {"Double", VarType::BoxedDouble},
        {"Boolean", VarType::BoxedBoolean}, {"Character", VarType::BoxedCharacter},
        {"Object", VarType::Object},     {"List", VarType::List},
        {"Map", VarType::Map},           {"Set", VarType::Set},
    };
    auto it = table.find(type_name);
    return it != table.end() ? it->second : VarType::UserDefined;
}

namespace {

class Resolver {
public:
    void run(Node* method) {
        scopes_.emplace_back();
        for (Node* p : method->args) {
            p->var_type = static_cast<int>(var_type_from_source(p->type_name));
            declare(p);
        }
        resolve_block(method->body);
        scopes_.pop_back();
    }

private:
    std::vector<std::unordered_map<std::string, Node*>> scopes_;

    void declare(Node* decl) { scopes_.back()[decl->name] = decl; }

    Node* lookup(const std::string& name) {
        for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
            auto found = it->find(name);
            if (found != it->end())
                return found->second;
        }
        return nullptr;
    }

    void resolve_name(Node* n) {
        Node* decl = lookup(n->name);
        if (decl == nullptr)
            throw UnresolvedName(n->name, n->span.line, n->span.col);
        n->decl = decl;
        n->var_type = decl->var_type;
    }

    void resolve_expr(Node* e) {
        if (e == nullptr)
            return;
        switch (e->kind) {
        case NodeKind::Name:
            resolve_name(e);
            break;
        case NodeKind::Literal:
            break;
        case NodeKind::Binary:
            resolve_expr(e->lhs);
            resolve_expr(e->rhs);
            break;
        case NodeKind::Unary:
        case NodeKind::Cast:
            resolve_expr(e->operand);
            break;
        case NodeKind::Call:
            // A bare callee name is a method name, not a variable; a field
            // access callee resolves only its target.
            if (e->target->kind == NodeKind::FieldAccess)
                resolve_expr(e->target->target);
            for (Node* a : e->args)
                resolve_expr(a);
            break;
        case NodeKind::FieldAccess:
            resolve_expr(e->target);
            break;
        case NodeKind::ArrayAccess:
            resolve_expr(e->target);
            resolve_expr(e->index);
            break;
        case NodeKind::New:
            for (Node* a : e->args)
                resolve_expr(a);
            break;
        case NodeKind::Assign: // for-update assignment expression
            resolve_expr(e->lhs);
            resolve_expr(e->rhs);
            break;
        case NodeKind::ExprStmt:
            resolve_expr(e->operand);
            break;
        default:
            throw InternalError(std::string("unexpected expression kind ") +
                                node_kind_name(e->kind));
        }
    }

    void resolve_stmt(Node* s) {
        switch (s->kind) {
        case NodeKind::Block:
            resolve_block(s);
            break;
        case NodeKind::VarDecl:
            s->var_type = static_cast<int>(var_type_from_source(s->type_name));
            resolve_expr(s->init); // initializer sees the outer binding, not itself
            declare(s);
            break;
        case NodeKind::Assign:
            resolve_expr(s->lhs);
            resolve_expr(s->rhs);
            break;
        case NodeKind::ExprStmt:
            resolve_expr(s->operand);
            break;
        case NodeKind::If:
            resolve_expr(s->cond);
            resolve_block(s->then_branch);
            if (s->else_branch != nullptr)
                resolve_block(s->else_branch);
            break;
        case NodeKind::While:
            resolve_expr(s->cond);
            resolve_block(s->body);
            break;
        case NodeKind::DoWhile:
            resolve_block(s->body);
            resolve_expr(s->cond);
            break;
        case NodeKind::For:
            scopes_.emplace_back(); // for-init declarations scope to the loop
            if (s->init != nullptr)
                resolve_stmt(s->init);
            resolve_expr(s->cond);
            resolve_expr(s->update);
            resolve_block(s->body);
            scopes_.pop_back();
            break;
        case NodeKind::Foreach:
            resolve_expr(s->source); // source sees the outer scope only
            scopes_.emplace_back();
            s->var_type = static_cast<int>(var_type_from_source(s->type_name));
            declare(s);
            resolve_block(s->body);
            scopes_.pop_back();
            break;
        case NodeKind::Switch:
            resolve_expr(s->cond);
            for (Node* arm : s->stmts) {
                resolve_expr(arm->label);
                scopes_.emplace_back();
                for (Node* as : arm->stmts)
                    resolve_stmt(as);
                scopes_.pop_back();
            }
            break;
        case NodeKind::Break:
        case NodeKind::Continue:
            break;
        case NodeKind::Return:
            resolve_expr(s->operand);
            break;
        default:
            throw InternalError(std::string("unexpected statement kind ") +
                                node_kind_name(s->kind));
        }
    }

    void resolve_block(Node* block) {
        scopes_.emplace_back();
        for (Node* s : block->stmts)
            resolve_stmt(s);
        scopes_.pop_back();
    }
};

} // namespace

void resolve_types(Ast& ast) {
    if (ast.root == nullptr)
        throw InternalError("resolve_types on empty AST");
    Resolver r;
    r.run(ast.root);
}

} // namespace sfgloc
