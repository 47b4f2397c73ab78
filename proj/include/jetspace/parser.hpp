#pragma once

#include <string>

#include "jetspace/polynomial.hpp"

namespace jetspace {

// Grammar: sums and differences of terms; '*' required between factors; '^' takes a
// nonnegative integer; '/' divides by a nonzero constant subexpression. Identifiers
// of the shape [abc]<digits> or [abc]<digits>_<digits> are jet or wedge variables,
// "i" is the imaginary unit, anything else is an auxiliary variable.
Polynomial parse_polynomial(const std::string& text);

// Parses a constant expression; rejects anything containing a variable.
GaussianRational parse_constant(const std::string& text);

}  // namespace jetspace
