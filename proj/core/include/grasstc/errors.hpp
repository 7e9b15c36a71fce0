#pragma once

#include <stdexcept>
#include <string>

namespace grasstc {

// Raised when a computation would exceed a configured resource budget.
// Catching it is a legitimate outcome ("could not decide within budget"),
// distinct from a mathematical negative.
class infeasible_error : public std::runtime_error {
public:
    explicit infeasible_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed input: bad parameters, mismatched variable spaces,
// unparsable text, corrupt cache payloads.
class usage_error : public std::invalid_argument {
public:
    explicit usage_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace grasstc
