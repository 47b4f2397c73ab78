#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jetspace {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

struct zero_polynomial_error : error {
    explicit zero_polynomial_error(const std::string& what_op)
        : error(what_op + " is undefined for the zero polynomial") {}
};

struct missing_assignment : error {
    explicit missing_assignment(const std::string& var)
        : error("no value assigned to variable " + var) {}
};

struct parse_error : error {
    std::size_t position;
    parse_error(const std::string& message, std::size_t pos)
        : error(message + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

// Raised when a computation exceeds its declared budget; carries the observed count
// so reports can show how far the computation got.
struct budget_exceeded : error {
    std::string stage;
    std::uint64_t count;
    budget_exceeded(const std::string& stage_, std::uint64_t count_)
        : error("budget exceeded in " + stage_ + " after " + std::to_string(count_) + " steps"),
          stage(stage_),
          count(count_) {}
};

struct fixture_error : error {
    using error::error;
};

// Violated internal invariant; indicates a bug, not bad input.
struct engine_error : error {
    using error::error;
};

}  // namespace jetspace
