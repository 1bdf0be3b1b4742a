#pragma once

#include "sfgloc/token.hpp"

#include <string>

namespace sfgloc {

// Tokenizes a Java-subset source string. Comments go to the side channel,
// whitespace is skipped but recoverable through token offsets. Throws
// LexError with the offending position on an illegal character.
TokenStream tokenize(const std::string& source);

bool is_java_keyword(const std::string& word);

} // namespace sfgloc
