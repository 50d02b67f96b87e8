#pragma once

#include "barycalc/batch.hpp"
#include "barycalc/model.hpp"
#include "barycalc/report.hpp"
#include "barycalc/sampler.hpp"

#include <vector>

namespace barycalc {

// Two parallel segments x0->y0 and x1->y1 with identical displacement,
// plus the weights at which the parallelogram argument is replayed.
class TranslationQuad {
public:
    TranslationQuad(Point x0, Point x1, Point y0, Point y1, std::vector<Weight> epsilons);

    const Point& x0() const { return x0_; }
    const Point& x1() const { return x1_; }
    const Point& y0() const { return y0_; }
    const Point& y1() const { return y1_; }
    const std::vector<Weight>& epsilons() const { return epsilons_; }

private:
    Point x0_;
    Point x1_;
    Point y0_;
    Point y1_;
    std::vector<Weight> epsilons_;
};

// The recovered norm value of a direction vector, together with the base
// points that witnessed it. Translation invariance is what makes the value
// base-point independent; that independence is asserted exactly.
struct NormProbe {
    Coordinates direction;
    std::vector<Point> bases;
    Rational value;
    Rational scale{1};  // the positive factor q at which q*direction was representable

    Json to_json() const;
};

// Asserts d(x, (1-lambda)x + lambda y) = lambda d(x, y) exactly on sampled
// (x, y, lambda).
CheckReport check_uniform_on_lines(const ConvexModel& model, const Sampler& sampler,
                                   ExecMode mode = ExecMode::Parallel);

// Replays the parallelogram argument on one quad: for each epsilon the
// interpolants satisfy
//   d(x_e, z_e) <= e * d(x1, y1),
//   d(x_e, y_e)  = d(x_e, z_e) / e  and  <= d(x1, y1),
// and the endpoint distances agree: d(x0, y0) = d(x1, y1).
CheckReport check_translation_invariance(const ConvexModel& model, const TranslationQuad& quad);

// Deterministic quads for a hull model: generator-derived ones first, then
// sampled ones whose fourth corner stays inside the hull.
std::vector<TranslationQuad> sample_translation_quads(const ConvexModel& model,
                                                      const Sampler& sampler, std::size_t count,
                                                      std::vector<Weight> epsilons);

// Recovers N(v) = d(x, x + v) from every admissible base point, shrinking v
// by powers of two when necessary and rescaling by positive homogeneity.
// All admissible bases must agree exactly.
NormProbe recover_norm(const ConvexModel& model, const Coordinates& direction,
                       const Sampler& sampler, const std::vector<Point>& extra_bases = {});

// End-to-end pipeline: embeds a generated carrier, identifies the quotient
// coordinates with the hull through the affine map fixed on the generators,
// and asserts d(x, y) = N(x - y) for every pair checked. Throws
// PipelineError when the embedding is not injective.
CheckReport verify_isometry(const ConvexModel& model, const Sampler& sampler, std::size_t depth,
                            ExecMode mode = ExecMode::Parallel);

// Computes C0 as the largest ambient norm of a generator, then asserts the
// first metric condition with C = C0 and the sampled diameter bound 2*C0.
CheckReport boundedness_check(const ConvexModel& model, const Sampler& sampler,
                              ExecMode mode = ExecMode::Parallel);

}  // namespace barycalc
