#ifndef SYMBREAK_ERRORS_HPP
#define SYMBREAK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace symbreak {

// Thrown when a graph exceeds the automorphism engine's configured limits
// (vertex count or materialized group size).
struct size_limit_error : std::runtime_error {
    explicit size_limit_error(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an exhaustive search would exceed its configured budget.
// Searches either run to completion or refuse up front; they never sample.
struct budget_error : std::runtime_error {
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace symbreak

#endif
