#pragma once

#include "barycalc/model.hpp"
#include "barycalc/point.hpp"
#include "barycalc/prob.hpp"
#include "barycalc/rng.hpp"

#include <cstdint>
#include <vector>

namespace barycalc {

// The dyadic-plus-thirds weight grid {k/2^m : m <= max_pow} together with
// 1/3 and 2/3, sorted ascending. Dyadics exercise the gamma recursion;
// thirds exercise the non-dyadic output of nu_assoc.
std::vector<Weight> dyadic_plus_thirds_grid(unsigned max_pow);

// All distributions of length n whose weights are grid values summing to
// exactly 1, in lexicographic order of the weight tuples.
std::vector<ProbDist> enumerate_grid_distributions(const std::vector<Weight>& grid,
                                                   std::size_t n);

// Deterministic instance source. Identical (seed, grid, budget, model)
// always produces the identical sample at every index: each draw is a pure
// function of (seed, stream, index), never of evaluation order.
struct Sampler {
    std::uint64_t seed = 42;
    std::vector<Weight> grid;
    std::size_t budget = 1000;

    Sampler() = default;
    Sampler(std::uint64_t seed_, std::vector<Weight> grid_, std::size_t budget_);

    std::vector<Weight> interior_grid() const;

    Weight weight_at(SplitMix64& rng) const;
    Weight interior_weight_at(SplitMix64& rng) const;

    // A random carrier point: a small-denominator convex combination of the
    // generators for hull models, a uniformly drawn element otherwise.
    Point point_at(const ConvexModel& model, SplitMix64& rng) const;

    // A k-tuple of carrier points. Low indices enumerate all generator
    // tuples (mixed radix) so extreme configurations are always visited;
    // the remainder is sampled.
    std::vector<Point> point_tuple(const ConvexModel& model, std::size_t k,
                                   std::uint64_t index, SplitMix64& rng) const;
    std::uint64_t tuple_enumeration_prefix(const ConvexModel& model, std::size_t k) const;

    // A random distribution of length n with denominator dividing 48.
    ProbDist dist_at(std::size_t n, SplitMix64& rng) const;
};

}  // namespace barycalc
