#pragma once

#include <string>
#include <vector>

namespace sfgloc {

enum class TokenKind {
    Keyword,
    Identifier,
    Literal,
    Operator,
    Punctuation,
    EndOfFile,
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;
    int line = 1;   // 1-based
    int col = 1;    // 1-based
    std::size_t offset = 0; // byte offset into the original source
};

// Comments never enter the token stream; they are collected on a side channel
// because the model consumes them as the natural-language sequence W.
struct Comment {
    std::string text; // comment body without the // or /* */ delimiters
    int line = 1;
    int col = 1;
};

struct TokenStream {
    std::vector<Token> tokens;   // terminated by an EndOfFile token
    std::vector<Comment> comments;
    std::string source;

    // All comment bodies joined with single spaces, in source order.
    std::string joined_comments() const;
};

const char* token_kind_name(TokenKind k);

} // namespace sfgloc
