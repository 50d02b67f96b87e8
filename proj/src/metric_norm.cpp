#include "barycalc/metric_norm.hpp"

#include "barycalc/embedding.hpp"
#include "barycalc/errors.hpp"
#include "barycalc/geometry.hpp"

#include <algorithm>

namespace barycalc {

namespace {

enum Stream : std::uint64_t {
    kStreamUniform = 70,
    kStreamQuads = 71,
    kStreamNormBases = 72,
    kStreamIsometry = 73,
    kStreamDiameter = 74,
};

Failure simple_failure(std::uint64_t i, Json inputs, const Rational& lhs, const Rational& rhs) {
    Failure f;
    f.instance = i;
    f.inputs = std::move(inputs);
    f.lhs = lhs.to_string();
    f.rhs = rhs.to_string();
    return f;
}

}  // namespace

TranslationQuad::TranslationQuad(Point x0, Point x1, Point y0, Point y1,
                                 std::vector<Weight> epsilons)
    : x0_(std::move(x0)), x1_(std::move(x1)), y0_(std::move(y0)), y1_(std::move(y1)),
      epsilons_(std::move(epsilons)) {
    if (!x0_.is_vector() || !x1_.is_vector() || !y0_.is_vector() || !y1_.is_vector()) {
        throw InvalidQuadError("translation quads need coordinate points");
    }
    if (sub(y1_.coords(), x1_.coords()) != sub(y0_.coords(), x0_.coords())) {
        throw InvalidQuadError("displacement identity y1 - x1 = y0 - x0 violated");
    }
    for (std::size_t i = 0; i < epsilons_.size(); ++i) {
        if (!epsilons_[i].is_interior()) {
            throw InvalidQuadError("quad epsilons must lie in (0,1)");
        }
        if (i && !(epsilons_[i] < epsilons_[i - 1])) {
            throw InvalidQuadError("quad epsilons must decrease");
        }
    }
}

Json NormProbe::to_json() const {
    Json j;
    j["direction"] = json_of(direction);
    Json b = Json::array();
    for (const auto& p : bases) {
        b.push_back(json_of(p));
    }
    j["bases"] = b;
    j["value"] = value.to_string();
    j["scale"] = scale.to_string();
    return j;
}

CheckReport check_uniform_on_lines(const ConvexModel& model, const Sampler& sampler,
                                   ExecMode mode) {
    (void)model.metric();
    auto eval = [&](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamUniform, i);
        const auto pts = sampler.point_tuple(model, 2, i, rng);
        const Weight lam = sampler.weight_at(rng);
        // (1-lambda)x + lambda y carries weight 1-lambda on x.
        const Point q = model.cc(lam.complement(), pts[0], pts[1]);
        const Rational lhs = model.distance(pts[0], q);
        const Rational rhs = lam.value() * model.distance(pts[0], pts[1]);
        if (lhs == rhs) {
            return InstanceResult::pass();
        }
        Json in;
        in["x"] = json_of(pts[0]);
        in["y"] = json_of(pts[1]);
        in["lambda"] = lam.to_string();
        return InstanceResult::fail(simple_failure(i, in, lhs, rhs));
    };
    BatchResult r = run_batch(sampler.budget, mode, eval);
    CheckReport report;
    report.check = "uniform-on-lines";
    report.instances = r.instances;
    report.skipped = r.skipped;
    report.record(std::move(r.failures));
    return report;
}

CheckReport check_translation_invariance(const ConvexModel& model, const TranslationQuad& quad) {
    (void)model.metric();
    CheckReport report;
    report.check = "translation-invariance";
    std::vector<Failure> failures;
    std::uint64_t idx = 0;

    const Rational reference = model.distance(quad.x1(), quad.y1());
    auto expect = [&](bool ok, const char* relation, const Weight* eps, const Rational& lhs,
                      const Rational& rhs) {
        ++report.instances;
        if (!ok) {
            Json in;
            in["relation"] = relation;
            if (eps) {
                in["epsilon"] = eps->to_string();
            }
            failures.push_back(simple_failure(idx, in, lhs, rhs));
        }
        ++idx;
    };

    for (const auto& eps : quad.epsilons()) {
        const Point xe = model.cc(eps, quad.x1(), quad.x0());
        const Point ye = model.cc(eps, quad.y1(), quad.y0());
        const Point ze = model.cc(eps.complement(), xe, ye);
        const Rational d_xz = model.distance(xe, ze);
        const Rational d_xy = model.distance(xe, ye);
        expect(d_xz <= eps.value() * reference, "d(xe,ze) <= eps*d(x1,y1)", &eps, d_xz,
               eps.value() * reference);
        expect(d_xy == d_xz / eps.value(), "d(xe,ye) = d(xe,ze)/eps", &eps, d_xy,
               d_xz / eps.value());
        expect(d_xy <= reference, "d(xe,ye) <= d(x1,y1)", &eps, d_xy, reference);
    }
    const Rational base = model.distance(quad.x0(), quad.y0());
    expect(base == reference, "d(x0,y0) = d(x1,y1)", nullptr, base, reference);
    report.record(std::move(failures));
    return report;
}

std::vector<TranslationQuad> sample_translation_quads(const ConvexModel& model,
                                                      const Sampler& sampler, std::size_t count,
                                                      std::vector<Weight> epsilons) {
    std::vector<TranslationQuad> quads;
    auto try_add = [&](const Point& x0, const Point& y0, const Point& x1) {
        if (quads.size() >= count) {
            return;
        }
        const Coordinates shift = sub(y0.coords(), x0.coords());
        const Coordinates y1 = add(x1.coords(), shift);
        if (!model.contains(y1)) {
            return;
        }
        quads.emplace_back(x0, x1, y0, Point::vector(y1), epsilons);
    };
    const auto gens = model.generator_points();
    for (std::size_t i = 0; i < gens.size() && quads.size() < count; ++i) {
        for (std::size_t j = 0; j < gens.size() && quads.size() < count; ++j) {
            for (std::size_t k = 0; k < gens.size() && quads.size() < count; ++k) {
                try_add(gens[i], gens[j], gens[k]);
            }
        }
    }
    for (std::uint64_t i = 0; quads.size() < count && i < sampler.budget; ++i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamQuads, i);
        const Point x0 = sampler.point_at(model, rng);
        const Point y0 = sampler.point_at(model, rng);
        const Point x1 = sampler.point_at(model, rng);
        try_add(x0, y0, x1);
    }
    return quads;
}

NormProbe recover_norm(const ConvexModel& model, const Coordinates& direction,
                       const Sampler& sampler, const std::vector<Point>& extra_bases) {
    if (direction.size() != model.dimension()) {
        throw DimensionError("direction dimension does not match the model");
    }
    NormProbe probe;
    probe.direction = direction;
    if (is_zero(direction)) {
        probe.value = Rational(0);
        return probe;
    }

    std::vector<Point> candidates = extra_bases;
    candidates.push_back(Point::vector(model.generator_centroid()));
    for (const auto& g : model.generators()) {
        candidates.push_back(Point::vector(g));
    }
    {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamNormBases, 0);
        for (std::size_t i = 0; i < 4; ++i) {
            candidates.push_back(sampler.point_at(model, rng));
        }
    }

    // Start the scale search near the hull's own extent so directions of
    // any magnitude reach an admissible scale within the halving budget.
    Rational direction_span;
    for (const auto& c : direction) {
        if (c.abs() > direction_span) {
            direction_span = c.abs();
        }
    }
    const Coordinates centroid = model.generator_centroid();
    Rational hull_span;
    for (const auto& g : model.generators()) {
        for (const auto& c : sub(g, centroid)) {
            if (c.abs() > hull_span) {
                hull_span = c.abs();
            }
        }
    }
    Rational scale(1);
    if (!hull_span.is_zero() && hull_span < direction_span) {
        scale = hull_span / direction_span;
    }
    constexpr int kMaxShrink = 40;
    for (int attempt = 0; attempt <= kMaxShrink; ++attempt) {
        const Coordinates scaled_dir = scaled(scale, direction);
        std::vector<Point> admissible;
        Rational value;
        bool have_value = false;
        for (const auto& b : candidates) {
            const Coordinates target = add(b.coords(), scaled_dir);
            if (!model.contains(target)) {
                continue;
            }
            const Rational d = model.distance(b, Point::vector(target)) / scale;
            if (!have_value) {
                value = d;
                have_value = true;
            } else if (d != value) {
                throw Error("recovered norm is base-point dependent: " + d.to_string() +
                            " vs " + value.to_string());
            }
            admissible.push_back(b);
        }
        if (have_value) {
            probe.bases = std::move(admissible);
            probe.value = value;
            probe.scale = scale;
            return probe;
        }
        scale = scale / Rational(2);
    }
    throw UnrepresentableDirectionError("no admissible base point for direction " +
                                        to_string(direction));
}

CheckReport verify_isometry(const ConvexModel& model, const Sampler& sampler, std::size_t depth,
                            ExecMode mode) {
    const FiniteCarrier carrier =
        generate_carrier(model, model.generator_points(), sampler.grid, depth);
    const RelationSet relations = build_relations(carrier, model, sampler.grid);
    const EmbeddingReport embedding = quotient_coordinates(relations, carrier);
    if (!embedding.injective) {
        throw PipelineError("embedding is not injective; no isometry exists on this sample");
    }
    (void)model.metric();

    // Affine identification fixed on the generators: express each quotient
    // coordinate vector as an affine combination of the generator images,
    // then apply the same combination to the generators themselves.
    const std::size_t n_gens = model.generator_points().size();
    const std::size_t dim_w = embedding.quotient_dimension;
    std::vector<Coordinates> identified(carrier.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        std::vector<std::vector<Rational>> rows(dim_w + 1, std::vector<Rational>(n_gens));
        std::vector<Rational> rhs(dim_w + 1);
        for (std::size_t r = 0; r < dim_w; ++r) {
            for (std::size_t gcol = 0; gcol < n_gens; ++gcol) {
                rows[r][gcol] = embedding.coordinates[gcol][r];
            }
            rhs[r] = embedding.coordinates[i][r];
        }
        for (std::size_t gcol = 0; gcol < n_gens; ++gcol) {
            rows[dim_w][gcol] = Rational(1);
        }
        rhs[dim_w] = Rational(1);
        auto combo = solve_linear(std::move(rows), std::move(rhs));
        if (!combo) {
            throw PipelineError("carrier coordinates escape the generators' affine span");
        }
        Coordinates mapped(model.dimension(), Rational(0));
        for (std::size_t gcol = 0; gcol < n_gens; ++gcol) {
            if (!(*combo)[gcol].is_zero()) {
                mapped = add(mapped, scaled((*combo)[gcol], model.generators()[gcol]));
            }
        }
        identified[i] = std::move(mapped);
    }

    CheckReport report;
    report.check = "isometry";
    std::vector<Failure> failures;

    // Round trip: the identification must send every embedded carrier point
    // back to itself.
    {
        auto eval = [&](std::uint64_t i) {
            if (identified[static_cast<std::size_t>(i)] ==
                carrier.point(static_cast<std::size_t>(i)).coords()) {
                return InstanceResult::pass();
            }
            Json in;
            in["relation"] = "affine-round-trip";
            in["index"] = i;
            Failure f;
            f.instance = i;
            f.inputs = in;
            f.lhs = to_string(identified[static_cast<std::size_t>(i)]);
            f.rhs = carrier.point(static_cast<std::size_t>(i)).to_string();
            return InstanceResult::fail(std::move(f));
        };
        BatchResult r = run_batch(carrier.size(), mode, eval);
        report.instances += r.instances;
        for (auto& f : r.failures) {
            failures.push_back(std::move(f));
        }
    }

    // Sampled pairs: all ordered pairs when feasible, otherwise a seeded
    // sample of `budget` pairs.
    const std::uint64_t k = carrier.size();
    const bool all_pairs = k * k <= 20000;
    const std::uint64_t pair_total = all_pairs ? k * k : sampler.budget;
    {
        auto eval = [&](std::uint64_t t) {
            std::size_t i, j;
            if (all_pairs) {
                i = static_cast<std::size_t>(t % k);
                j = static_cast<std::size_t>(t / k);
            } else {
                SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamIsometry, t);
                i = static_cast<std::size_t>(rng.below(k));
                j = static_cast<std::size_t>(rng.below(k));
            }
            try {
                const Coordinates v = sub(identified[i], identified[j]);
                const NormProbe probe =
                    recover_norm(model, v, sampler, {carrier.point(j)});
                const Rational expected = model.distance(carrier.point(i), carrier.point(j));
                if (probe.value == expected) {
                    return InstanceResult::pass();
                }
                Json in;
                in["relation"] = "d(x,y) = N(x-y)";
                in["x"] = json_of(carrier.point(i));
                in["y"] = json_of(carrier.point(j));
                return InstanceResult::fail(
                    simple_failure(k + t, std::move(in), probe.value, expected));
            } catch (const Error& e) {
                Json in;
                in["relation"] = "d(x,y) = N(x-y)";
                in["error"] = e.what();
                Failure f;
                f.instance = k + t;
                f.inputs = in;
                f.lhs = "error";
                f.rhs = "";
                return InstanceResult::fail(std::move(f));
            }
        };
        BatchResult r = run_batch(pair_total, mode, eval);
        report.instances += r.instances;
        report.skipped += r.skipped;
        for (auto& f : r.failures) {
            failures.push_back(std::move(f));
        }
    }

    std::sort(failures.begin(), failures.end(),
              [](const Failure& a, const Failure& b) { return a.instance < b.instance; });
    report.record(std::move(failures));
    report.stats["carrier_size"] = std::to_string(carrier.size());
    report.stats["quotient_dimension"] = std::to_string(embedding.quotient_dimension);
    report.stats["pairs"] = std::to_string(pair_total);
    return report;
}

CheckReport boundedness_check(const ConvexModel& model, const Sampler& sampler, ExecMode mode) {
    (void)model.metric();
    Rational c0;
    for (const auto& g : model.generators()) {
        const Rational n = model.norm(g);
        if (n > c0) {
            c0 = n;
        }
    }

    CheckReport eq7 = check_first_metric_condition(model, c0, sampler, mode);

    // Sampled diameter: generator pairs first, then random pairs.
    const auto gens = model.generator_points();
    const std::uint64_t prefix = static_cast<std::uint64_t>(gens.size()) * gens.size();
    const std::uint64_t total = prefix + sampler.budget;
    const Rational bound = Rational(2) * c0;
    std::vector<Rational> observed(static_cast<std::size_t>(total), Rational(0));
    auto eval = [&](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamDiameter, i);
        Point x = gens[0];
        Point y = gens[0];
        if (i < prefix) {
            x = gens[static_cast<std::size_t>(i % gens.size())];
            y = gens[static_cast<std::size_t>(i / gens.size())];
        } else {
            x = sampler.point_at(model, rng);
            y = sampler.point_at(model, rng);
        }
        const Rational d = model.distance(x, y);
        observed[static_cast<std::size_t>(i)] = d;
        if (d <= bound) {
            return InstanceResult::pass();
        }
        Json in;
        in["relation"] = "diameter";
        in["x"] = json_of(x);
        in["y"] = json_of(y);
        return InstanceResult::fail(simple_failure(i, std::move(in), d, bound));
    };
    BatchResult diam = run_batch(total, mode, eval);

    CheckReport report;
    report.check = "boundedness";
    report.instances = eq7.instances + diam.instances;
    report.skipped = eq7.skipped + diam.skipped;
    std::vector<Failure> failures = std::move(eq7.failures);
    report.failure_count = eq7.failure_count;
    const std::uint64_t offset = eq7.instances;
    for (auto& f : diam.failures) {
        f.instance += offset;
        failures.push_back(std::move(f));
    }
    report.failure_count += diam.failures.size();
    report.failures = std::move(failures);
    if (report.failures.size() > CheckReport::kMaxStoredFailures) {
        report.failures.resize(CheckReport::kMaxStoredFailures);
    }
    Rational max_d;
    for (const auto& d : observed) {
        if (d > max_d) {
            max_d = d;
        }
    }
    report.stats["c0"] = c0.to_string();
    report.stats["diameter_bound"] = bound.to_string();
    report.stats["max_distance"] = max_d.to_string();
    report.stats["max_ratio"] = eq7.stats["max_ratio"];
    return report;
}

}  // namespace barycalc
