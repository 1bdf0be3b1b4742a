#include "sfgloc/sfg_builder.hpp"

#include <sstream>

namespace sfgloc {

namespace {

// Identifiers and method names never need escaping beyond this.
std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

// Schema v1, emitted one node/edge per line so graphs diff cleanly:
//   { "schemaVersion": 1, "methodId": str,
//     "nodes": [{ "id", "kind", "name"?, "varType"?, "role"?, "ctrlType"?,
//                 "span": [line, col, endLine, endCol] }],
//     "edges": [{ "from", "to", "kind" }] }
std::string sfg_to_json(const SemanticFlowGraph& g) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"schemaVersion\": 1,\n";
    out << "  \"methodId\": " << quoted(g.method_id) << ",\n";
    out << "  \"nodes\": [";
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
        const SfgNode& n = g.nodes[i];
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"id\": " << n.id;
        if (n.kind == SfgNodeKind::Variable) {
            out << ", \"kind\": \"variable\", \"name\": " << quoted(n.name)
                << ", \"varType\": \"" << var_type_name(n.var_type) << "\", \"role\": \""
                << role_name(n.role) << "\"";
        } else {
            out << ", \"kind\": \"control\", \"ctrlType\": \"" << ctrl_type_name(n.ctrl_type)
                << "\"";
        }
        out << ", \"span\": [" << n.span.line << ", " << n.span.col << ", " << n.span.end_line
            << ", " << n.span.end_col << "]}";
    }
    out << (g.nodes.empty() ? "],\n" : "\n  ],\n");
    out << "  \"edges\": [";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const SfgEdge& e = g.edges[i];
        out << (i == 0 ? "\n" : ",\n");
        out << "    {\"from\": " << e.from << ", \"to\": " << e.to << ", \"kind\": \""
            << sfg_edge_kind_name(e.kind) << "\"}";
    }
    out << (g.edges.empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

std::string sfg_to_dot(const SemanticFlowGraph& g) {
    std::ostringstream out;
    out << "digraph sfg {\n";
    out << "  rankdir=TB;\n";
    for (const SfgNode& n : g.nodes) {
        out << "  n" << n.id << " [";
        if (n.kind == SfgNodeKind::Variable) {
            out << "shape=ellipse, label=\"" << n.name << "\\n" << var_type_name(n.var_type)
                << " / " << role_name(n.role) << "\"";
        } else {
            out << "shape=box, label=\"" << ctrl_type_name(n.ctrl_type) << "\"";
        }
        out << "];\n";
    }
    for (const SfgEdge& e : g.edges) {
        out << "  n" << e.from << " -> n" << e.to;
        switch (e.kind) {
        case SfgEdgeKind::Data:
            out << " [style=solid]";
            break;
        case SfgEdgeKind::Control:
            out << " [style=bold]";
            break;
        case SfgEdgeKind::Sequential:
            out << " [style=dashed]";
            break;
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

} // namespace sfgloc
