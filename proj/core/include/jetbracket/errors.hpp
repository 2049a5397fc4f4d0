#pragma once

#include <stdexcept>
#include <string>

namespace jetbracket {

/// Contract violation in the operator calculus (dimension mismatch,
/// non-square input, malformed construction).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Positioned syntax or validation error in problem-file input.
struct ParseError : Error {
    int line;
    int column;

    ParseError(int line_, int column_, const std::string& msg)
        : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) + ": " + msg),
          line(line_),
          column(column_) {}
};

}  // namespace jetbracket
