#pragma once

#include <stdexcept>
#include <string>

namespace sfgloc {

// All recoverable failures are reported through these exception types so the
// CLI can map them onto stable exit codes (input=2, config=3, internal=4).

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LexError : InputError {
    LexError(const std::string& msg, int line, int col)
        : InputError(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

struct ParseError : InputError {
    ParseError(const std::string& msg, int line, int col)
        : InputError(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

struct UnsupportedConstruct : InputError {
    UnsupportedConstruct(const std::string& what, int line, int col)
        : InputError("unsupported construct: " + what + " at " + std::to_string(line) + ":" +
                     std::to_string(col)),
          line(line), col(col) {}
    int line;
    int col;
};

struct UnresolvedName : InputError {
    UnresolvedName(const std::string& name, int line, int col)
        : InputError("unresolved name '" + name + "' at " + std::to_string(line) + ":" +
                     std::to_string(col)),
          name(name), line(line), col(col) {}
    std::string name;
    int line;
    int col;
};

struct LengthError : InputError {
    using InputError::InputError;
};

struct ShapeError : InternalError {
    using InternalError::InternalError;
};

struct GradCheckFailure : InternalError {
    using InternalError::InternalError;
};

struct StatsError : InternalError {
    using InternalError::InternalError;
};

struct DiffParseError : InputError {
    DiffParseError(const std::string& msg, int line)
        : InputError(msg + " at diff line " + std::to_string(line)), line(line) {}
    int line;
};

struct MetricError : InputError {
    using InputError::InputError;
};

struct SplitError : InputError {
    using InputError::InputError;
};

} // namespace sfgloc
