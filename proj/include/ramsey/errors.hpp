#pragma once

#include <stdexcept>
#include <string>

namespace ramsey {

/// Caller broke a precondition or supplied a malformed file.
struct InputError : std::invalid_argument {
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A file failed to parse; `line` is 1-based.
struct ParseError : InputError {
    int line;
    ParseError(int line_, const std::string& what)
        : InputError("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

/// A guaranteed internal condition failed at runtime. This is never an input
/// problem: it falsifies either the implementation or the argument it encodes,
/// so it must never be swallowed.
struct LogicViolation : std::logic_error {
    explicit LogicViolation(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond) throw InputError(what);
}

inline void guarantee(bool cond, const std::string& what) {
    if (!cond) throw LogicViolation(what);
}

}  // namespace ramsey
