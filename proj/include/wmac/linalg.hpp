#pragma once

#include <cstddef>
#include <vector>

#include "wmac/scalar.hpp"

namespace wmac {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Basis of {x : a x = 0}. Pivots are chosen with the fewest numerator terms.
std::vector<std::vector<Scalar>> nullspace(ScalarMatrix a, std::size_t cols);

// The unique x with a x = b. Throws std::domain_error if inconsistent or not unique.
std::vector<Scalar> solve(ScalarMatrix a, std::vector<Scalar> b, std::size_t cols);

std::size_t rank(ScalarMatrix a, std::size_t cols);

// Rank after specializing s, w. Throws DegenerateSpecialization at poles.
std::size_t rank_at(const ScalarMatrix& a, std::size_t cols, const Rational& s0, const Rational& w0);

ScalarMatrix multiply(const ScalarMatrix& x, const ScalarMatrix& y);
ScalarMatrix identity_matrix(std::size_t n);

}  // namespace wmac
