#pragma once

#include <vector>

#include "ipsf/rational.hpp"

namespace ipsf::detail {

using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

// Exact Gauss-Jordan solve of M x = rhs. Throws NumericalError if M is
// singular.
RationalVector solve_exact(RationalMatrix m, RationalVector rhs);

// Null-space vector of a square matrix whose kernel must be exactly
// one-dimensional; throws NumericalError otherwise.
RationalVector nullspace_1d(RationalMatrix m);

} // namespace ipsf::detail
