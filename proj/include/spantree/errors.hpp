#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace spantree {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : Error {
    using Error::Error;
};

// An input exceeds a hard size guard (oracles, canonical labeling, ...).
struct SizeGuardError : Error {
    using Error::Error;
};

// Malformed textual input; positions are 1-based.
struct ParseError : Error {
    ParseError(const std::string& what, std::size_t line_no, std::size_t column_no)
        : Error(what + " (line " + std::to_string(line_no) + ", column " +
                std::to_string(column_no) + ")"),
          line(line_no),
          column(column_no) {}

    std::size_t line;
    std::size_t column;
};

}  // namespace spantree
