#pragma once

#include "barycalc/model.hpp"
#include "barycalc/point.hpp"
#include "barycalc/prob.hpp"

#include <span>

namespace barycalc::testing {

// Direct affine combination sum_i mu(i) * x_i over hull coordinates.
// Deliberately independent of ConvexModel::gamma: no recursion, no cc, so
// it can serve as the oracle the derived operation is checked against.
inline Point affine_combination_oracle(const ProbDist& mu, std::span<const Point> pts) {
    Coordinates acc(pts[0].coords().size(), Rational(0));
    for (std::size_t i = 0; i < mu.size(); ++i) {
        if (!mu[i].is_zero()) {
            acc = add(acc, scaled(mu[i].value(), pts[i].coords()));
        }
    }
    return Point::vector(acc);
}

}  // namespace barycalc::testing
