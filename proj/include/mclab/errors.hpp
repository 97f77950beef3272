#pragma once

#include <stdexcept>
#include <string>

namespace mclab {

// Wall-crossing geometry that cannot be solved (no lateral motion, or a
// discriminant below zero despite the inside/outside precondition).
struct GeometryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text input; carries the 1-based line number of the offender.
struct ParseError : std::runtime_error {
    ParseError(const std::string& what, long line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    long line;
};

// Training blew up (non-finite parameters or loss).
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace mclab
