#pragma once

#include "sfgloc/ast.hpp"

#include <array>
#include <string>

namespace sfgloc {

// The 20 variable types: 8 primitives, 11 common library types, and a
// catch-all for everything else. Array declarations of any element type
// collapse to Array.
enum class VarType {
    Byte,
    Short,
    Int,
    Long,
    Float,
    Double,
    Boolean,
    Char,
    String,
    BoxedInteger,
    BoxedLong,
    BoxedDouble,
    BoxedBoolean,
    BoxedCharacter,
    Object,
    List,
    Map,
    Set,
    Array,
    UserDefined,
};

constexpr int kVarTypeCount = 20;

const char* var_type_name(VarType t);
const std::array<VarType, kVarTypeCount>& all_var_types();

// Maps a declared type's source text ("int", "Foo", "int[]") to a VarType.
VarType var_type_from_source(const std::string& type_name);

// Annotates every variable declaration and Name use with its VarType and
// links each Name to its innermost visible declaration. Throws UnresolvedName
// if a Name used as a variable has no declaration in scope. The annotated
// tree is the "typed AST" consumed by the SFG builder.
void resolve_types(Ast& ast);

} // namespace sfgloc
