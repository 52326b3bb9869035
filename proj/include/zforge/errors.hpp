#pragma once

#include <stdexcept>
#include <string>

namespace zforge {

// Base class for everything this library throws on bad input.
// Internal logic bugs use std::logic_error instead and are not
// meant to be caught.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Formula text that does not scan or parse. line/column are 1-based.
struct SyntaxError : Error {
    int line = 0;
    int column = 0;
    SyntaxError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// A construct that is valid in some mode but not the requested one,
// e.g. NOT/NAND/XOR in a monotone compile.
struct ModeViolation : Error {
    int line = 0;
    int column = 0;
    explicit ModeViolation(const std::string& msg) : Error(msg) {}
    ModeViolation(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), column(col_) {}
};

// Wrong number or shape of inputs/outputs: assignment arity mismatches,
// unknown or missing variables, malformed files.
struct ShapeError : Error {
    using Error::Error;
};

// A request that exceeds a configured enumeration limit.
struct LimitError : Error {
    using Error::Error;
};

} // namespace zforge
