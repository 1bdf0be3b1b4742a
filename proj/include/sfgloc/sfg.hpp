#pragma once

#include "sfgloc/ast.hpp"
#include "sfgloc/types.hpp"

#include <string>
#include <vector>

namespace sfgloc {

// Control-node types over the statement subset: a condition node, one node
// per branch, and a convergence node for every control instruction.
enum class CtrlType {
    IfCondition,
    IfThen,
    IfElse,
    IfCONVERGE,
    WhileCondition,
    WhileBody,
    WhileCONVERGE,
    DoBody,
    DoCondition,
    DoCONVERGE,
    ForCondition,
    ForBody,
    ForUpdate,
    ForCONVERGE,
    ForeachSource,
    ForeachBody,
    ForeachCONVERGE,
    SwitchCondition,
    SwitchCase,
    SwitchCONVERGE,
};

constexpr int kCtrlTypeCount = 20;

// Computation role of a variable occurrence, determined by its direct AST
// parent and its position under that parent. "Assignement" is intentional.
enum class Role {
    Assigned,
    Assignement,
    InvocationTarget,
    InvocationArgument,
    BinaryLeftOperand,
    BinaryRightOperand,
    UnaryOperand,
    Returned,
    ConditionOperand,
    ArrayTarget,
    ArrayIndex,
    FieldTarget,
    Declared,
    Initializer,
    Parameter,
    CastOperand,
    NewArgument,
    ForUpdateOperand,
    ForeachVariable,
    ForeachSourceVar,
    SwitchSelector,
    CaseLabelVar,
    CompoundAssigned,
    CompoundOperand,
};

constexpr int kRoleCount = 24;

const char* ctrl_type_name(CtrlType t);
const char* role_name(Role r);

enum class SfgNodeKind { Variable, Control };
enum class SfgEdgeKind { Data, Control, Sequential };

const char* sfg_edge_kind_name(SfgEdgeKind k);

struct SfgNode {
    int id = -1;
    SfgNodeKind kind = SfgNodeKind::Variable;
    Span span; // anchor used for deterministic ordering and token alignment

    // Variable nodes
    const Node* ast = nullptr; // occurrence site (Name / Param / VarDecl / Foreach)
    std::string name;
    VarType var_type = VarType::UserDefined;
    Role role = Role::Parameter;

    // Control nodes
    CtrlType ctrl_type = CtrlType::IfCondition;
    const Node* owner_stmt = nullptr;
};

struct SfgEdge {
    int from = -1;
    int to = -1;
    SfgEdgeKind kind = SfgEdgeKind::Data;

    friend bool operator==(const SfgEdge&, const SfgEdge&) = default;
};

struct SemanticFlowGraph {
    std::string method_id;
    std::vector<SfgNode> nodes;
    std::vector<SfgEdge> edges; // deduplicated, sorted by (from, to, kind)
};

} // namespace sfgloc
