#pragma once

#include "sfgloc/sfg.hpp"

namespace sfgloc {

// Builds the Semantic Flow Graph for a resolved (typed) method AST.
// Pure: the same input yields an identical graph, node ids included.
SemanticFlowGraph build_sfg(const Ast& typed_ast);

// Convenience: tokenize + parse + resolve + build.
SemanticFlowGraph build_sfg_from_source(const std::string& source);

// JSON (schema v1) and Graphviz exports; see README for the schema.
std::string sfg_to_json(const SemanticFlowGraph& g);
std::string sfg_to_dot(const SemanticFlowGraph& g);

} // namespace sfgloc
