#pragma once

#include "barycalc/rational.hpp"

#include <optional>
#include <vector>

namespace barycalc {

// Exact membership test: is p a convex combination of the generators?
// Decided by a phase-I simplex over the rationals with Bland's rule, so the
// answer is exact and the iteration always terminates.
bool hull_contains(const std::vector<Coordinates>& generators, const Coordinates& p);

// Rank of the set {g - g0} over Q: the affine dimension of the generators.
std::size_t affine_dimension(const std::vector<Coordinates>& points);

// Solves A x = b exactly, with A given row-major as `rows` vectors of equal
// length. Returns one solution (free variables set to zero), or nothing if
// the system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(std::vector<std::vector<Rational>> rows,
                                                  std::vector<Rational> rhs);

}  // namespace barycalc
