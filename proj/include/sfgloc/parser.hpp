#pragma once

#include "sfgloc/ast.hpp"
#include "sfgloc/token.hpp"

namespace sfgloc {

// Parses a single method declaration. Throws ParseError on syntax errors and
// UnsupportedConstruct on valid Java that falls outside the subset
// (try/catch, lambdas, generics beyond raw List/Map/Set, labels, ...).
Ast parse_method(const TokenStream& tokens);

// Convenience: tokenize + parse.
Ast parse_method_source(const std::string& source);

} // namespace sfgloc
