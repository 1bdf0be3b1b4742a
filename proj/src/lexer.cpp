#include "sfgloc/lexer.hpp"

#include "sfgloc/errors.hpp"

#include <array>
#include <cctype>
#include <cstring>

namespace sfgloc {

namespace {

const std::array<const char*, 32> kKeywords = {
    "void",    "byte",   "short",  "int",     "long",   "float",  "double", "boolean",
    "char",    "if",     "else",   "while",   "do",     "for",    "switch", "case",
    "default", "break",  "continue", "return", "new",   "this",   "public", "private",
    "protected", "static", "final", "try",    "catch",  "finally", "throw", "synchronized",
};

bool is_ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_ident_part(char c) {
    return is_ident_start(c) || std::isdigit(static_cast<unsigned char>(c));
}

// Multi-character operators, longest first so greedy matching works.
const std::array<const char*, 24> kOperators = {
    ">>=", "<<=", "==", "!=", "<=", ">=", "&&", "||", "++", "--",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<", ">>",
    "->", "::", "?",  ":",
};

} // namespace

bool is_java_keyword(const std::string& word) {
    for (const char* kw : kKeywords) {
        if (word == kw)
            return true;
    }
    return false;
}

std::string TokenStream::joined_comments() const {
    std::string out;
    for (const Comment& c : comments) {
        if (!out.empty())
            out += ' ';
        out += c.text;
    }
    return out;
}

const char* token_kind_name(TokenKind k) {
    switch (k) {
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Literal: return "literal";
    case TokenKind::Operator: return "operator";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::EndOfFile: return "eof";
    }
    return "?";
}

TokenStream tokenize(const std::string& source) {
    TokenStream out;
    out.source = source;

    std::size_t i = 0;
    int line = 1;
    int col = 1;

    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < source.size(); ++k) {
            if (source[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
            ++i;
        }
    };

    auto push = [&](TokenKind kind, std::size_t begin, std::size_t len, int tline, int tcol) {
        Token t;
        t.kind = kind;
        t.text = source.substr(begin, len);
        t.line = tline;
        t.col = tcol;
        t.offset = begin;
        out.tokens.push_back(std::move(t));
    };

    while (i < source.size()) {
        char c = source[i];

        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }

        // Line comment.
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
            int cline = line, ccol = col;
            advance(2);
            std::size_t begin = i;
            while (i < source.size() && source[i] != '\n')
                advance(1);
            out.comments.push_back({source.substr(begin, i - begin), cline, ccol});
            continue;
        }

        // Block comment.
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '*') {
            int cline = line, ccol = col;
            advance(2);
            std::size_t begin = i;
            while (i + 1 < source.size() && !(source[i] == '*' && source[i + 1] == '/'))
                advance(1);
            if (i + 1 >= source.size())
                throw LexError("unterminated block comment", cline, ccol);
            out.comments.push_back({source.substr(begin, i - begin), cline, ccol});
            advance(2);
            continue;
        }

        int tline = line, tcol = col;
        std::size_t begin = i;

        if (is_ident_start(c)) {
            while (i < source.size() && is_ident_part(source[i]))
                advance(1);
            std::string word = source.substr(begin, i - begin);
            TokenKind kind;
            if (word == "true" || word == "false" || word == "null")
                kind = TokenKind::Literal;
            else if (is_java_keyword(word))
                kind = TokenKind::Keyword;
            else
                kind = TokenKind::Identifier;
            push(kind, begin, i - begin, tline, tcol);
            continue;
        }

        if (std::isdigit(static_cast<unsigned char>(c))) {
            bool seen_dot = false;
            while (i < source.size()) {
                char d = source[i];
                if (std::isdigit(static_cast<unsigned char>(d)) ||
                    d == 'x' || d == 'X' || (d >= 'a' && d <= 'f') || (d >= 'A' && d <= 'F') ||
                    d == 'l' || d == 'L') {
                    advance(1);
                } else if (d == '.' && !seen_dot && i + 1 < source.size() &&
                           std::isdigit(static_cast<unsigned char>(source[i + 1]))) {
                    seen_dot = true;
                    advance(1);
                } else {
                    break;
                }
            }
            push(TokenKind::Literal, begin, i - begin, tline, tcol);
            continue;
        }

        if (c == '"' || c == '\'') {
            char quote = c;
            advance(1);
            while (i < source.size() && source[i] != quote) {
                if (source[i] == '\\')
                    advance(1);
                if (i < source.size())
                    advance(1);
            }
            if (i >= source.size())
                throw LexError("unterminated literal", tline, tcol);
            advance(1);
            push(TokenKind::Literal, begin, i - begin, tline, tcol);
            continue;
        }

        if (std::strchr("(){}[];,.", c) != nullptr) {
            advance(1);
            push(TokenKind::Punctuation, begin, 1, tline, tcol);
            continue;
        }

        bool matched = false;
        for (const char* op : kOperators) {
            std::size_t n = std::strlen(op);
            if (source.compare(i, n, op) == 0) {
                advance(n);
                push(TokenKind::Operator, begin, n, tline, tcol);
                matched = true;
                break;
            }
        }
        if (matched)
            continue;

        if (std::strchr("=+-*/%<>!&|^~", c) != nullptr) {
            advance(1);
            push(TokenKind::Operator, begin, 1, tline, tcol);
            continue;
        }

        throw LexError(std::string("illegal character '") + c + "'", line, col);
    }

    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.line = line;
    eof.col = col;
    eof.offset = source.size();
    out.tokens.push_back(std::move(eof));
    return out;
}

} // namespace sfgloc
