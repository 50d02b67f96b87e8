#pragma once

#include "barycalc/batch.hpp"
#include "barycalc/model.hpp"
#include "barycalc/report.hpp"
#include "barycalc/sampler.hpp"

#include <optional>
#include <vector>

namespace barycalc {

// An exact counterexample to cancellation: y != z yet
// cc_lambda(x, y) = cc_lambda(x, z) for an interior lambda.
struct CancellationWitness {
    Point x;
    Point y;
    Point z;
    Weight lambda;

    Json to_json() const;
};

// Checks the four convex-space axioms (unit law, idempotency, commutativity,
// associativity) on sampled tuples, exhaustively when the carrier is finite
// and the instance space is small enough. Failures carry the axiom name and
// the exact offending tuple.
CheckReport check_convex_space_axioms(const ConvexModel& model, const Sampler& sampler,
                                      ExecMode mode = ExecMode::Parallel);

// Checks the algebraic n-ary axioms of the derived gamma operation:
// permutation invariance, merging of equal arguments, the Dirac law, and the
// product-split composition law, with n <= 5 and m <= 3.
CheckReport check_gamma_axioms(const ConvexModel& model, const Sampler& sampler,
                               ExecMode mode = ExecMode::Parallel);

// Checks the metric compatibility inequality
//   d(gamma_mu(x), gamma_mu(y)) <= sum_i mu(i) d(x_i, y_i)   (n <= 4)
// together with its binary contraction special case
//   d(cc_lambda(y,x), cc_lambda(z,x)) <= lambda d(y,z).
CheckReport check_metric_axiom(const ConvexModel& model, const Sampler& sampler,
                               ExecMode mode = ExecMode::Parallel);

// Checks d(gamma_mu(x), gamma_mu~(x)) <= C * l1(mu, mu~) for a claimed
// constant C. The report's stats carry the maximal observed ratio d/l1 as a
// lower bound on the best possible constant.
CheckReport check_first_metric_condition(const ConvexModel& model, const Rational& c,
                                         const Sampler& sampler,
                                         ExecMode mode = ExecMode::Parallel);

// Scans (x, y, z, lambda) with y != z and interior lambda for an exact
// cancellation violation; returns the first witness in scan order, or
// nothing if none exists within the budget.
std::optional<CancellationWitness> cancellation_search(const ConvexModel& model,
                                                       const Sampler& sampler);

// The weight sequence lambda_{k+1} = 2 lambda_k / (1 + lambda_k), returned
// as [lambda_1, ..., lambda_steps]; strictly increasing toward 1.
std::vector<Weight> lambda_sequence(const Weight& lambda0, std::size_t steps);

// Given a valid witness, verifies that the collision equation transports to
// every weight of the lambda sequence (upward) and to all smaller interior
// grid weights (downward). All comparisons are exact.
CheckReport cancellation_propagation(const ConvexModel& model,
                                     const CancellationWitness& witness, std::size_t steps,
                                     const Sampler& sampler);

}  // namespace barycalc
