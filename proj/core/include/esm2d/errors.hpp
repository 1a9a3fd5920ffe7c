#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace esm2d {

// invalid configuration (bad material constants, order above the cap, ...)
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// argument outside a function's domain (x <= 0, coincident points, ...)
struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// mismatched vector/grid sizes
struct ShapeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// |C_n| under the guard threshold in the rigid-disk solve
struct ResonanceError : std::runtime_error {
    ResonanceError(const std::string& msg, int n) : std::runtime_error(msg), order(n) {}
    int order;
};

// a series failed to converge before the order cap
struct TruncationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// least-squares solve unusable even after escalation
struct SolverError : std::runtime_error {
    SolverError(const std::string& msg, double cond) : std::runtime_error(msg), condition(cond) {}
    double condition;
};

// malformed input file; row is 1-based over physical lines
struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t r) : std::runtime_error(msg), row(r) {}
    std::size_t row;
};

}  // namespace esm2d
