#include "sfgloc/sfg_builder.hpp"

#include "sfgloc/errors.hpp"
#include "sfgloc/lexer.hpp"
#include "sfgloc/parser.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <vector>

namespace sfgloc {

const char* ctrl_type_name(CtrlType t) {
    switch (t) {
    case CtrlType::IfCondition: return "IfCondition";
    case CtrlType::IfThen: return "IfThen";
    case CtrlType::IfElse: return "IfElse";
    case CtrlType::IfCONVERGE: return "IfCONVERGE";
    case CtrlType::WhileCondition: return "WhileCondition";
    case CtrlType::WhileBody: return "WhileBody";
    case CtrlType::WhileCONVERGE: return "WhileCONVERGE";
    case CtrlType::DoBody: return "DoBody";
    case CtrlType::DoCondition: return "DoCondition";
    case CtrlType::DoCONVERGE: return "DoCONVERGE";
    case CtrlType::ForCondition: return "ForCondition";
    case CtrlType::ForBody: return "ForBody";
    case CtrlType::ForUpdate: return "ForUpdate";
    case CtrlType::ForCONVERGE: return "ForCONVERGE";
    case CtrlType::ForeachSource: return "ForeachSource";
    case CtrlType::ForeachBody: return "ForeachBody";
    case CtrlType::ForeachCONVERGE: return "ForeachCONVERGE";
    case CtrlType::SwitchCondition: return "SwitchCondition";
    case CtrlType::SwitchCase: return "SwitchCase";
    case CtrlType::SwitchCONVERGE: return "SwitchCONVERGE";
    }
    return "?";
}

const char* role_name(Role r) {
    switch (r) {
    case Role::Assigned: return "Assigned";
    case Role::Assignement: return "Assignement";
    case Role::InvocationTarget: return "InvocationTarget";
    case Role::InvocationArgument: return "InvocationArgument";
    case Role::BinaryLeftOperand: return "BinaryLeftOperand";
    case Role::BinaryRightOperand: return "BinaryRightOperand";
    case Role::UnaryOperand: return "UnaryOperand";
    case Role::Returned: return "Returned";
    case Role::ConditionOperand: return "ConditionOperand";
    case Role::ArrayTarget: return "ArrayTarget";
    case Role::ArrayIndex: return "ArrayIndex";
    case Role::FieldTarget: return "FieldTarget";
    case Role::Declared: return "Declared";
    case Role::Initializer: return "Initializer";
    case Role::Parameter: return "Parameter";
    case Role::CastOperand: return "CastOperand";
    case Role::NewArgument: return "NewArgument";
    case Role::ForUpdateOperand: return "ForUpdateOperand";
    case Role::ForeachVariable: return "ForeachVariable";
    case Role::ForeachSourceVar: return "ForeachSourceVar";
    case Role::SwitchSelector: return "SwitchSelector";
    case Role::CaseLabelVar: return "CaseLabelVar";
    case Role::CompoundAssigned: return "CompoundAssigned";
    case Role::CompoundOperand: return "CompoundOperand";
    }
    return "?";
}

const char* sfg_edge_kind_name(SfgEdgeKind k) {
    switch (k) {
    case SfgEdgeKind::Data: return "data";
    case SfgEdgeKind::Control: return "control";
    case SfgEdgeKind::Sequential: return "sequential";
    }
    return "?";
}

namespace {

bool is_control_stmt(const Node* s) {
    switch (s->kind) {
    case NodeKind::If:
    case NodeKind::While:
    case NodeKind::DoWhile:
    case NodeKind::For:
    case NodeKind::Foreach:
    case NodeKind::Switch:
        return true;
    default:
        return false;
    }
}

// Role of a variable occurrence from its direct AST parent and position.
Role role_of(const Node* occ) {
    if (occ->kind == NodeKind::Param)
        return Role::Parameter;
    if (occ->kind == NodeKind::VarDecl)
        return Role::Declared;
    if (occ->kind == NodeKind::Foreach)
        return Role::ForeachVariable;

    const Node* p = occ->parent;
    if (p == nullptr)
        throw InternalError("variable occurrence without parent");
    switch (p->kind) {
    case NodeKind::Assign:
        if (p->lhs == occ)
            return p->op == "=" ? Role::Assigned : Role::CompoundAssigned;
        return p->op == "=" ? Role::Assignement : Role::CompoundOperand;
    case NodeKind::VarDecl:
        return Role::Initializer; // init expression root
    case NodeKind::Binary:
        return p->lhs == occ ? Role::BinaryLeftOperand : Role::BinaryRightOperand;
    case NodeKind::Unary:
        if (p->parent != nullptr && p->parent->kind == NodeKind::For && p->parent->update == p)
            return Role::ForUpdateOperand;
        return Role::UnaryOperand;
    case NodeKind::Call:
        return Role::InvocationArgument;
    case NodeKind::FieldAccess:
        if (p->parent != nullptr && p->parent->kind == NodeKind::Call && p->parent->target == p)
            return Role::InvocationTarget;
        return Role::FieldTarget;
    case NodeKind::ArrayAccess:
        return p->target == occ ? Role::ArrayTarget : Role::ArrayIndex;
    case NodeKind::Cast:
        return Role::CastOperand;
    case NodeKind::New:
        return Role::NewArgument;
    case NodeKind::Return:
        return Role::Returned;
    case NodeKind::If:
    case NodeKind::While:
    case NodeKind::DoWhile:
        return Role::ConditionOperand;
    case NodeKind::For:
        if (p->cond == occ)
            return Role::ConditionOperand;
        if (p->update == occ)
            return Role::ForUpdateOperand; // bare-name update
        break;
    case NodeKind::Switch:
        return Role::SwitchSelector;
    case NodeKind::SwitchCase:
        return Role::CaseLabelVar;
    case NodeKind::Foreach:
        return Role::ForeachSourceVar; // source expression root
    default:
        break;
    }
    throw InternalError(std::string("no role table row for occurrence under ") +
                        node_kind_name(p->kind));
}

class Builder {
public:
    explicit Builder(const Ast& ast) : ast_(ast) {}

    SemanticFlowGraph build() {
        collect(ast_.root->body);
        for (const Node* p : ast_.root->args)
            add_occurrence(p);
        assign_ids();
        // sequential rule (i): condition variables -> condition node
        for (const Pending& pc : pending_controls_)
            condition_edges(pc.stmt);
        // control templates + nesting/sibling links + sequential rules (ii)-(iv)
        for (const Pending& pc : pending_controls_)
            template_edges(pc.stmt);
        link_region(region_statements(ast_.root->body), -1, -1);
        // data edges: reaching definitions to a fixpoint
        Env env;
        for (const Node* p : ast_.root->args)
            env[p] = {node_of(p)};
        analyze_region(region_statements(ast_.root->body), env);
        finish();
        SemanticFlowGraph g;
        g.method_id = ast_.root->name;
        g.nodes = std::move(nodes_);
        g.edges = std::move(edges_);
        return g;
    }

private:
    const Ast& ast_;

    struct ProtoNode {
        SfgNode node;
        const Node* key = nullptr; // occurrence site, null for control nodes
        int seq = 0;
    };
    std::vector<ProtoNode> protos_;
    int seq_counter_ = 0;

    struct Pending {
        const Node* stmt;
    };
    std::vector<Pending> pending_controls_;

    std::unordered_map<const Node*, int> occ_node_;          // occurrence site -> node id
    std::map<std::pair<const Node*, int>, int> ctrl_node_;   // (stmt, CtrlType) -> node id
    std::vector<SfgNode> nodes_;
    std::vector<SfgEdge> edges_;

    using Env = std::map<const Node*, std::set<int>>; // decl -> reaching def node ids

    // ---- node collection ----

    void add_occurrence(const Node* site) {
        ProtoNode p;
        p.node.kind = SfgNodeKind::Variable;
        p.node.ast = site;
        p.node.name = site->name;
        p.node.var_type = static_cast<VarType>(site->var_type);
        p.node.role = role_of(site);
        // occurrence spans cover the identifier token only, regardless of
        // how far the declaring statement extends
        p.node.span = site->span;
        p.node.span.end_line = site->span.line;
        p.node.span.end_col = site->span.col + static_cast<int>(site->name.size());
        p.node.span.end_offset = site->span.offset + site->name.size();
        p.key = site;
        p.seq = seq_counter_++;
        protos_.push_back(std::move(p));
    }

    void add_control(const Node* stmt, CtrlType t, const Span& anchor) {
        ProtoNode p;
        p.node.kind = SfgNodeKind::Control;
        p.node.ctrl_type = t;
        p.node.owner_stmt = stmt;
        p.node.span = anchor;
        p.key = nullptr;
        p.seq = seq_counter_++;
        protos_.push_back(std::move(p));
        ctrl_key_slots_.push_back({stmt, static_cast<int>(t),
                                   static_cast<int>(protos_.size()) - 1});
    }

    struct CtrlSlot {
        const Node* stmt;
        int type;
        int proto_index;
    };
    std::vector<CtrlSlot> ctrl_key_slots_;

    Span end_anchor(const Node* stmt) const {
        Span s;
        s.offset = stmt->span.end_offset;
        s.end_offset = stmt->span.end_offset;
        s.line = stmt->span.end_line;
        s.col = stmt->span.end_col;
        s.end_line = stmt->span.end_line;
        s.end_col = stmt->span.end_col;
        return s;
    }

    // Occurrence sites inside an expression subtree, in source order.
    void expr_occurrences(const Node* e, std::vector<const Node*>& out) const {
        if (e == nullptr)
            return;
        if (e->kind == NodeKind::Name) {
            if (e->decl != nullptr)
                out.push_back(e);
            return;
        }
        for (const Node* a : e->args)
            expr_occurrences(a, out);
        expr_occurrences(e->init, out);
        expr_occurrences(e->lhs, out);
        expr_occurrences(e->rhs, out);
        expr_occurrences(e->operand, out);
        if (e->kind == NodeKind::Call) {
            // bare callee names are method names; field-access callees are
            // visited through target below
            if (e->target->kind != NodeKind::Name)
                expr_occurrences(e->target, out);
        } else {
            expr_occurrences(e->target, out);
        }
        expr_occurrences(e->index, out);
        expr_occurrences(e->source, out);
        expr_occurrences(e->label, out);
    }

    void collect_expr(const Node* e) {
        std::vector<const Node*> occ;
        expr_occurrences(e, occ);
        for (const Node* o : occ)
            add_occurrence(o);
    }

    void collect(const Node* s) {
        switch (s->kind) {
        case NodeKind::Block:
            for (const Node* c : s->stmts)
                collect(c);
            break;
        case NodeKind::VarDecl:
            add_occurrence(s);
            collect_expr(s->init);
            break;
        case NodeKind::Assign:
        case NodeKind::ExprStmt:
        case NodeKind::Return:
            collect_expr(s->kind == NodeKind::Assign ? s->lhs : s->operand);
            if (s->kind == NodeKind::Assign)
                collect_expr(s->rhs);
            break;
        case NodeKind::Break:
        case NodeKind::Continue:
            break;
        case NodeKind::If:
            collect_expr(s->cond);
            add_control(s, CtrlType::IfCondition, s->cond->span);
            add_control(s, CtrlType::IfThen, s->then_branch->span);
            if (s->else_branch != nullptr)
                add_control(s, CtrlType::IfElse, s->else_branch->span);
            add_control(s, CtrlType::IfCONVERGE, end_anchor(s));
            pending_controls_.push_back({s});
            collect(s->then_branch);
            if (s->else_branch != nullptr)
                collect(s->else_branch);
            break;
        case NodeKind::While:
            collect_expr(s->cond);
            add_control(s, CtrlType::WhileCondition, s->cond->span);
            add_control(s, CtrlType::WhileBody, s->body->span);
            add_control(s, CtrlType::WhileCONVERGE, end_anchor(s));
            pending_controls_.push_back({s});
            collect(s->body);
            break;
        case NodeKind::DoWhile:
            add_control(s, CtrlType::DoBody, s->body->span);
            add_control(s, CtrlType::DoCondition, s->cond->span);
            add_control(s, CtrlType::DoCONVERGE, end_anchor(s));
            pending_controls_.push_back({s});
            collect(s->body);
            collect_expr(s->cond);
            break;
        case NodeKind::For:
            if (s->init != nullptr)
                collect(s->init);
            collect_expr(s->cond);
            add_control(s, CtrlType::ForCondition,
                        s->cond != nullptr ? s->cond->span : s->span);
            add_control(s, CtrlType::ForBody, s->body->span);
            if (s->update != nullptr) {
                collect_expr(s->update);
                add_control(s, CtrlType::ForUpdate, s->update->span);
            }
            add_control(s, CtrlType::ForCONVERGE, end_anchor(s));
            pending_controls_.push_back({s});
            collect(s->body);
            break;
        case NodeKind::Foreach:
            add_occurrence(s); // the loop variable
            collect_expr(s->source);
            add_control(s, CtrlType::ForeachSource, s->source->span);
            add_control(s, CtrlType::ForeachBody, s->body->span);
            add_control(s, CtrlType::ForeachCONVERGE, end_anchor(s));
            pending_controls_.push_back({s});
            collect(s->body);
            break;
        case NodeKind::Switch:
            collect_expr(s->cond);
            add_control(s, CtrlType::SwitchCondition, s->cond->span);
            for (const Node* arm : s->stmts) {
                collect_expr(arm->label);
                add_control(arm, CtrlType::SwitchCase, arm->span);
            }
            add_control(s, CtrlType::SwitchCONVERGE, end_anchor(s));
            pending_controls_.push_back({s});
            for (const Node* arm : s->stmts)
                for (const Node* as : arm->stmts)
                    collect(as);
            break;
        default:
            throw InternalError(std::string("unexpected statement in collect: ") +
                                node_kind_name(s->kind));
        }
    }

    void assign_ids() {
        std::vector<int> order(protos_.size());
        for (std::size_t i = 0; i < order.size(); ++i)
            order[i] = static_cast<int>(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            const ProtoNode& pa = protos_[static_cast<std::size_t>(a)];
            const ProtoNode& pb = protos_[static_cast<std::size_t>(b)];
            if (pa.node.span.offset != pb.node.span.offset)
                return pa.node.span.offset < pb.node.span.offset;
            bool ca = pa.node.kind == SfgNodeKind::Control;
            bool cb = pb.node.kind == SfgNodeKind::Control;
            if (ca != cb)
                return !ca; // variables before control nodes on a tie
            return pa.seq < pb.seq;
        });
        nodes_.resize(protos_.size());
        std::vector<int> id_of_proto(protos_.size());
        for (std::size_t rank = 0; rank < order.size(); ++rank) {
            int pi = order[rank];
            id_of_proto[static_cast<std::size_t>(pi)] = static_cast<int>(rank);
            SfgNode n = protos_[static_cast<std::size_t>(pi)].node;
            n.id = static_cast<int>(rank);
            if (n.kind == SfgNodeKind::Variable)
                occ_node_[protos_[static_cast<std::size_t>(pi)].key] = n.id;
            nodes_[rank] = std::move(n);
        }
        for (const CtrlSlot& slot : ctrl_key_slots_)
            ctrl_node_[{slot.stmt, slot.type}] =
                id_of_proto[static_cast<std::size_t>(slot.proto_index)];
    }

    int node_of(const Node* occ) const {
        auto it = occ_node_.find(occ);
        if (it == occ_node_.end())
            throw InternalError("unknown occurrence");
        return it->second;
    }

    int ctrl(const Node* stmt, CtrlType t) const {
        auto it = ctrl_node_.find({stmt, static_cast<int>(t)});
        if (it == ctrl_node_.end())
            throw InternalError("unknown control node");
        return it->second;
    }

    void edge(int from, int to, SfgEdgeKind k) { edges_.push_back({from, to, k}); }

    // ---- E_C templates and E_S rule (i) ----

    int entry_node(const Node* stmt) const {
        switch (stmt->kind) {
        case NodeKind::If: return ctrl(stmt, CtrlType::IfCondition);
        case NodeKind::While: return ctrl(stmt, CtrlType::WhileCondition);
        case NodeKind::DoWhile: return ctrl(stmt, CtrlType::DoBody);
        case NodeKind::For: return ctrl(stmt, CtrlType::ForCondition);
        case NodeKind::Foreach: return ctrl(stmt, CtrlType::ForeachSource);
        case NodeKind::Switch: return ctrl(stmt, CtrlType::SwitchCondition);
        default: throw InternalError("entry_node on non-control statement");
        }
    }

    int exit_node(const Node* stmt) const {
        switch (stmt->kind) {
        case NodeKind::If: return ctrl(stmt, CtrlType::IfCONVERGE);
        case NodeKind::While: return ctrl(stmt, CtrlType::WhileCONVERGE);
        case NodeKind::DoWhile: return ctrl(stmt, CtrlType::DoCONVERGE);
        case NodeKind::For: return ctrl(stmt, CtrlType::ForCONVERGE);
        case NodeKind::Foreach: return ctrl(stmt, CtrlType::ForeachCONVERGE);
        case NodeKind::Switch: return ctrl(stmt, CtrlType::SwitchCONVERGE);
        default: throw InternalError("exit_node on non-control statement");
        }
    }

    void condition_edges(const Node* s) {
        auto emit = [&](const Node* expr, int target) {
            std::vector<const Node*> occ;
            expr_occurrences(expr, occ);
            for (const Node* o : occ)
                edge(node_of(o), target, SfgEdgeKind::Sequential);
        };
        switch (s->kind) {
        case NodeKind::If:
            emit(s->cond, ctrl(s, CtrlType::IfCondition));
            break;
        case NodeKind::While:
            emit(s->cond, ctrl(s, CtrlType::WhileCondition));
            break;
        case NodeKind::DoWhile:
            emit(s->cond, ctrl(s, CtrlType::DoCondition));
            break;
        case NodeKind::For:
            emit(s->cond, ctrl(s, CtrlType::ForCondition));
            break;
        case NodeKind::Foreach:
            // both the iterable's variables and the loop variable belong to
            // the header and connect to the source node
            emit(s->source, ctrl(s, CtrlType::ForeachSource));
            edge(node_of(s), ctrl(s, CtrlType::ForeachSource), SfgEdgeKind::Sequential);
            break;
        case NodeKind::Switch:
            emit(s->cond, ctrl(s, CtrlType::SwitchCondition));
            for (const Node* arm : s->stmts)
                if (arm->label != nullptr)
                    emit(arm->label, ctrl(arm, CtrlType::SwitchCase));
            break;
        default:
            break;
        }
    }

    void template_edges(const Node* s) {
        auto ec = [&](int a, int b) { edge(a, b, SfgEdgeKind::Control); };
        switch (s->kind) {
        case NodeKind::If: {
            int cond = ctrl(s, CtrlType::IfCondition);
            int conv = ctrl(s, CtrlType::IfCONVERGE);
            int then = ctrl(s, CtrlType::IfThen);
            ec(cond, then);
            ec(then, conv);
            if (s->else_branch != nullptr) {
                int els = ctrl(s, CtrlType::IfElse);
                ec(cond, els);
                ec(els, conv);
            }
            break;
        }
        case NodeKind::While: {
            int cond = ctrl(s, CtrlType::WhileCondition);
            int body = ctrl(s, CtrlType::WhileBody);
            int conv = ctrl(s, CtrlType::WhileCONVERGE);
            ec(cond, body);
            ec(body, cond);
            ec(cond, conv);
            break;
        }
        case NodeKind::DoWhile: {
            int body = ctrl(s, CtrlType::DoBody);
            int cond = ctrl(s, CtrlType::DoCondition);
            int conv = ctrl(s, CtrlType::DoCONVERGE);
            ec(body, cond);
            ec(cond, body);
            ec(cond, conv);
            break;
        }
        case NodeKind::For: {
            int cond = ctrl(s, CtrlType::ForCondition);
            int body = ctrl(s, CtrlType::ForBody);
            int conv = ctrl(s, CtrlType::ForCONVERGE);
            ec(cond, body);
            if (s->update != nullptr) {
                int upd = ctrl(s, CtrlType::ForUpdate);
                ec(body, upd);
                ec(upd, cond);
            } else {
                ec(body, cond);
            }
            ec(cond, conv);
            break;
        }
        case NodeKind::Foreach: {
            int src = ctrl(s, CtrlType::ForeachSource);
            int body = ctrl(s, CtrlType::ForeachBody);
            int conv = ctrl(s, CtrlType::ForeachCONVERGE);
            ec(src, body);
            ec(body, src);
            ec(src, conv);
            break;
        }
        case NodeKind::Switch: {
            int cond = ctrl(s, CtrlType::SwitchCondition);
            int conv = ctrl(s, CtrlType::SwitchCONVERGE);
            for (const Node* arm : s->stmts) {
                int c = ctrl(arm, CtrlType::SwitchCase);
                ec(cond, c);
                ec(c, conv);
            }
            break;
        }
        default:
            break;
        }
    }

    // ---- E_S rules (ii)-(iv) and structural E_C links ----

    // Flattens bare nested blocks; control statements stay as single items.
    std::vector<const Node*> region_statements(const Node* block) const {
        std::vector<const Node*> out;
        for (const Node* s : block->stmts) {
            if (s->kind == NodeKind::Block) {
                auto inner = region_statements(s);
                out.insert(out.end(), inner.begin(), inner.end());
            } else {
                out.push_back(s);
            }
        }
        return out;
    }

    // Leftmost variable occurrence of a plain statement, or null.
    const Node* leftmost_var(const Node* stmt) const {
        std::vector<const Node*> occ;
        if (stmt->kind == NodeKind::VarDecl) {
            occ.push_back(stmt);
            expr_occurrences(stmt->init, occ);
        } else if (stmt->kind == NodeKind::Assign) {
            expr_occurrences(stmt->lhs, occ);
            expr_occurrences(stmt->rhs, occ);
        } else {
            expr_occurrences(stmt->operand, occ);
        }
        const Node* best = nullptr;
        for (const Node* o : occ)
            if (best == nullptr || o->span.offset < best->span.offset)
                best = o;
        return best;
    }

    // Walks one straight-line region. `alpha` is the branch node owning the
    // region (or -1 at method level), `omega` its convergence node (or -1).
    void link_region(const std::vector<const Node*>& stmts, int alpha, int omega) {
        int pending = alpha; // node waiting to connect forward into the region
        for (const Node* s : stmts) {
            if (is_control_stmt(s)) {
                // the for-init statement runs before the construct itself
                if (s->kind == NodeKind::For && s->init != nullptr) {
                    const Node* v = leftmost_var(s->init);
                    if (v != nullptr) {
                        if (pending >= 0)
                            edge(pending, node_of(v), SfgEdgeKind::Sequential);
                        pending = -1;
                    }
                }
                if (pending >= 0)
                    edge(pending, entry_node(s), SfgEdgeKind::Control);
                pending = exit_node(s);
                descend(s);
            } else {
                const Node* v = leftmost_var(s);
                if (v == nullptr)
                    continue; // statements without variables are skipped
                if (pending >= 0)
                    edge(pending, node_of(v), SfgEdgeKind::Sequential);
                pending = -1;
            }
        }
        if (omega < 0)
            return;
        // rule (iii) or the closing structural link, scanning backward
        for (auto it = stmts.rbegin(); it != stmts.rend(); ++it) {
            const Node* s = *it;
            if (is_control_stmt(s)) {
                edge(exit_node(s), omega, SfgEdgeKind::Control);
                return;
            }
            const Node* v = leftmost_var(s);
            if (v != nullptr) {
                edge(node_of(v), omega, SfgEdgeKind::Sequential);
                return;
            }
        }
    }

    void descend(const Node* s) {
        switch (s->kind) {
        case NodeKind::If:
            link_region(region_statements(s->then_branch), ctrl(s, CtrlType::IfThen),
                        ctrl(s, CtrlType::IfCONVERGE));
            if (s->else_branch != nullptr)
                link_region(region_statements(s->else_branch), ctrl(s, CtrlType::IfElse),
                            ctrl(s, CtrlType::IfCONVERGE));
            break;
        case NodeKind::While:
            link_region(region_statements(s->body), ctrl(s, CtrlType::WhileBody),
                        ctrl(s, CtrlType::WhileCONVERGE));
            break;
        case NodeKind::DoWhile:
            link_region(region_statements(s->body), ctrl(s, CtrlType::DoBody),
                        ctrl(s, CtrlType::DoCONVERGE));
            break;
        case NodeKind::For:
            link_region(region_statements(s->body), ctrl(s, CtrlType::ForBody),
                        ctrl(s, CtrlType::ForCONVERGE));
            if (s->update != nullptr) {
                // the update clause acts as a one-statement branch
                std::vector<const Node*> occ;
                expr_occurrences(s->update, occ);
                const Node* best = nullptr;
                for (const Node* o : occ)
                    if (best == nullptr || o->span.offset < best->span.offset)
                        best = o;
                if (best != nullptr) {
                    edge(ctrl(s, CtrlType::ForUpdate), node_of(best), SfgEdgeKind::Sequential);
                    edge(node_of(best), ctrl(s, CtrlType::ForCONVERGE), SfgEdgeKind::Sequential);
                }
            }
            break;
        case NodeKind::Foreach:
            link_region(region_statements(s->body), ctrl(s, CtrlType::ForeachBody),
                        ctrl(s, CtrlType::ForeachCONVERGE));
            break;
        case NodeKind::Switch:
            for (const Node* arm : s->stmts) {
                std::vector<const Node*> armStmts;
                for (const Node* as : arm->stmts) {
                    if (as->kind == NodeKind::Block) {
                        auto inner = region_statements(as);
                        armStmts.insert(armStmts.end(), inner.begin(), inner.end());
                    } else {
                        armStmts.push_back(as);
                    }
                }
                link_region(armStmts, ctrl(arm, CtrlType::SwitchCase),
                            ctrl(s, CtrlType::SwitchCONVERGE));
            }
            break;
        default:
            break;
        }
    }

    // ---- E_D: reaching definitions ----

    static Env merge(const Env& a, const Env& b) {
        Env out = a;
        for (const auto& [decl, defs] : b)
            out[decl].insert(defs.begin(), defs.end());
        return out;
    }

    // Emits value-flow edges from the reaching definitions of every variable
    // read by `reads` into the defining occurrence `def_occ`.
    void emit_reads(const std::vector<const Node*>& reads, int def_node, const Env& env) {
        for (const Node* r : reads) {
            auto it = env.find(r->decl);
            if (it == env.end())
                continue; // read before any write: no incoming value
            for (int d : it->second)
                edge(d, def_node, SfgEdgeKind::Data);
        }
    }

    // ++/-- occurrences embedded in an expression: each is a read+write.
    void embedded_updates(const Node* e, std::vector<const Node*>& out) const {
        if (e == nullptr)
            return;
        if (e->kind == NodeKind::Unary && (e->op == "++" || e->op == "--") &&
            e->operand->kind == NodeKind::Name && e->operand->decl != nullptr)
            out.push_back(e->operand);
        for (const Node* a : e->args)
            embedded_updates(a, out);
        embedded_updates(e->init, out);
        embedded_updates(e->lhs, out);
        embedded_updates(e->rhs, out);
        embedded_updates(e->operand, out);
        embedded_updates(e->target, out);
        embedded_updates(e->index, out);
        embedded_updates(e->source, out);
    }

    void apply_embedded_updates(const Node* expr, Env& env) {
        std::vector<const Node*> upd;
        embedded_updates(expr, upd);
        for (const Node* u : upd) {
            emit_reads({u}, node_of(u), env);
            env[u->decl] = {node_of(u)};
        }
    }

    Env analyze_stmt(const Node* s, Env env) {
        switch (s->kind) {
        case NodeKind::Block:
            return analyze_region(region_statements(s), std::move(env));
        case NodeKind::VarDecl: {
            if (s->init != nullptr) {
                std::vector<const Node*> reads;
                expr_occurrences(s->init, reads);
                emit_reads(reads, node_of(s), env);
                apply_embedded_updates(s->init, env);
                env[s] = {node_of(s)};
            }
            return env;
        }
        case NodeKind::Assign: {
            std::vector<const Node*> reads;
            expr_occurrences(s->rhs, reads);
            const Node* lhs = s->lhs;
            const Node* def_site = nullptr;
            if (lhs->kind == NodeKind::Name) {
                def_site = lhs;
                if (s->op != "=")
                    reads.push_back(lhs); // compound assignment reads the target
            } else if (lhs->kind == NodeKind::ArrayAccess) {
                // element write: the index is read, the array is weakly updated
                def_site = lhs->target->kind == NodeKind::Name ? lhs->target : nullptr;
                expr_occurrences(lhs->index, reads);
            } else if (lhs->kind == NodeKind::FieldAccess) {
                def_site = lhs->target->kind == NodeKind::Name ? lhs->target : nullptr;
            }
            if (def_site == nullptr || def_site->decl == nullptr)
                return env; // nested targets: pure reads, no tracked definition
            emit_reads(reads, node_of(def_site), env);
            apply_embedded_updates(s->rhs, env);
            if (lhs->kind == NodeKind::Name)
                env[def_site->decl] = {node_of(def_site)}; // strong update
            else
                env[def_site->decl].insert(node_of(def_site)); // weak update
            return env;
        }
        case NodeKind::ExprStmt: {
            const Node* e = s->operand;
            if (e->kind == NodeKind::Unary && (e->op == "++" || e->op == "--") &&
                e->operand->kind == NodeKind::Name) {
                const Node* v = e->operand;
                emit_reads({v}, node_of(v), env);
                env[v->decl] = {node_of(v)};
            } else {
                apply_embedded_updates(e, env);
            }
            return env;
        }
        case NodeKind::Return:
        case NodeKind::Break:
        case NodeKind::Continue:
            return env;
        case NodeKind::If: {
            Env thenOut = analyze_region(region_statements(s->then_branch), env);
            Env elseOut = s->else_branch != nullptr
                              ? analyze_region(region_statements(s->else_branch), env)
                              : env;
            return merge(thenOut, elseOut);
        }
        case NodeKind::While: {
            Env top = env;
            for (int guard = 0; guard < 64; ++guard) {
                Env bodyOut = analyze_region(region_statements(s->body), top);
                Env next = merge(env, bodyOut);
                if (next == top)
                    break;
                top = std::move(next);
            }
            return top;
        }
        case NodeKind::DoWhile: {
            Env top = env;
            Env bodyOut;
            for (int guard = 0; guard < 64; ++guard) {
                bodyOut = analyze_region(region_statements(s->body), top);
                Env next = merge(env, bodyOut);
                if (next == top)
                    break;
                top = std::move(next);
            }
            return bodyOut; // the body runs at least once
        }
        case NodeKind::For: {
            if (s->init != nullptr)
                env = analyze_stmt(s->init, std::move(env));
            Env top = env;
            for (int guard = 0; guard < 64; ++guard) {
                Env bodyOut = analyze_region(region_statements(s->body), top);
                if (s->update != nullptr)
                    bodyOut = analyze_update(s->update, std::move(bodyOut));
                Env next = merge(env, bodyOut);
                if (next == top)
                    break;
                top = std::move(next);
            }
            return top;
        }
        case NodeKind::Foreach: {
            // the loop variable is defined from the source on every iteration
            std::vector<const Node*> reads;
            expr_occurrences(s->source, reads);
            emit_reads(reads, node_of(s), env);
            Env top = env;
            top[s] = {node_of(s)};
            for (int guard = 0; guard < 64; ++guard) {
                Env bodyOut = analyze_region(region_statements(s->body), top);
                Env next = merge(env, bodyOut);
                next[s] = {node_of(s)};
                if (next == top)
                    break;
                top = std::move(next);
            }
            Env out = top;
            out.erase(s); // the loop variable goes out of scope
            return out;
        }
        case NodeKind::Switch: {
            bool has_default = false;
            Env out;
            bool first = true;
            for (const Node* arm : s->stmts) {
                if (arm->label == nullptr)
                    has_default = true;
                Env armEnv = env;
                for (const Node* as : arm->stmts)
                    armEnv = analyze_stmt(as, std::move(armEnv));
                out = first ? armEnv : merge(out, armEnv);
                first = false;
            }
            if (first)
                out = env;
            if (!has_default)
                out = merge(out, env);
            return out;
        }
        default:
            throw InternalError(std::string("unexpected statement in analyze: ") +
                                node_kind_name(s->kind));
        }
    }

    Env analyze_update(const Node* e, Env env) {
        if (e->kind == NodeKind::Assign) {
            std::vector<const Node*> reads;
            expr_occurrences(e->rhs, reads);
            if (e->lhs->kind == NodeKind::Name) {
                if (e->op != "=")
                    reads.push_back(e->lhs);
                emit_reads(reads, node_of(e->lhs), env);
                env[e->lhs->decl] = {node_of(e->lhs)};
            }
            return env;
        }
        if (e->kind == NodeKind::Unary && (e->op == "++" || e->op == "--") &&
            e->operand->kind == NodeKind::Name) {
            emit_reads({e->operand}, node_of(e->operand), env);
            env[e->operand->decl] = {node_of(e->operand)};
            return env;
        }
        return env;
    }

    Env analyze_region(const std::vector<const Node*>& stmts, Env env) {
        for (const Node* s : stmts)
            env = analyze_stmt(s, std::move(env));
        return env;
    }

    void finish() {
        std::sort(edges_.begin(), edges_.end(), [](const SfgEdge& a, const SfgEdge& b) {
            if (a.from != b.from)
                return a.from < b.from;
            if (a.to != b.to)
                return a.to < b.to;
            return static_cast<int>(a.kind) < static_cast<int>(b.kind);
        });
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }
};

} // namespace

SemanticFlowGraph build_sfg(const Ast& typed_ast) {
    if (typed_ast.root == nullptr)
        throw InternalError("build_sfg on empty AST");
    Builder b(typed_ast);
    return b.build();
}

SemanticFlowGraph build_sfg_from_source(const std::string& source) {
    Ast ast = parse_method_source(source);
    resolve_types(ast);
    return build_sfg(ast);
}

} // namespace sfgloc
