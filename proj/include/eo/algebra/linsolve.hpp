#pragma once

#include <vector>

#include "eo/algebra/rational.hpp"

namespace eo::algebra {

using Matrix = std::vector<std::vector<Rational>>;

// Fraction-free (Bareiss) elimination on the integer-scaled system.
// Throws SingularMatrix, or SizeMismatch for non-square input.
std::vector<Rational> solve_exact(const Matrix& a, const std::vector<Rational>& b);

// Indices of a maximal set of linearly independent rows, chosen greedily in order.
std::vector<std::size_t> independent_rows(const Matrix& rows);

}  // namespace eo::algebra
