#include "barycalc/axioms.hpp"

#include "barycalc/errors.hpp"

#include <algorithm>
#include <functional>

namespace barycalc {

namespace {

// Finite instance spaces up to this size are enumerated exhaustively;
// anything larger (or infinite, as for hull carriers) is sampled with the
// sampler's budget.
constexpr std::uint64_t kExhaustLimit = 1u << 18;

// Stream ids keep per-instance randomness disjoint across sub-checks.
enum Stream : std::uint64_t {
    kStreamCs = 10,
    kStreamGamma1 = 20,
    kStreamGamma2 = 21,
    kStreamGamma3 = 22,
    kStreamGamma5 = 23,
    kStreamMetric = 30,
    kStreamContraction = 31,
    kStreamFirstMetric = 40,
    kStreamCancelSearch = 50,
    kStreamPropagation = 60,
};

Failure make_failure(std::uint64_t instance, Json inputs, std::string lhs, std::string rhs) {
    Failure f;
    f.instance = instance;
    f.inputs = std::move(inputs);
    f.lhs = std::move(lhs);
    f.rhs = std::move(rhs);
    return f;
}

struct SubCheck {
    std::string axiom;
    std::uint64_t total;
    std::function<InstanceResult(std::uint64_t)> eval;
};

CheckReport run_subchecks(std::string name, const std::vector<SubCheck>& subs, ExecMode mode) {
    CheckReport report;
    report.check = std::move(name);
    std::uint64_t base = 0;
    std::vector<Failure> all;
    for (const auto& sub : subs) {
        BatchResult r = run_batch(sub.total, mode, sub.eval);
        report.instances += r.instances;
        report.skipped += r.skipped;
        for (auto& f : r.failures) {
            f.instance += base;
            all.push_back(std::move(f));
        }
        base += sub.total;
    }
    report.record(std::move(all));
    return report;
}

// Carrier points for exhaustive enumeration on finite models.
std::vector<Point> finite_points(const ConvexModel& model) {
    std::vector<Point> pts;
    for (const auto& e : model.elements()) {
        pts.push_back(Point::element(e));
    }
    return pts;
}

bool exhaustive(const ConvexModel& model, std::uint64_t space) {
    return model.has_finite_carrier() && space <= kExhaustLimit;
}

}  // namespace

Json CancellationWitness::to_json() const {
    Json j;
    j["x"] = json_of(x);
    j["y"] = json_of(y);
    j["z"] = json_of(z);
    j["lambda"] = lambda.to_string();
    return j;
}

CheckReport check_convex_space_axioms(const ConvexModel& model, const Sampler& sampler,
                                      ExecMode mode) {
    const auto grid = sampler.grid;
    const std::uint64_t g = grid.size();
    const std::vector<Point> carrier =
        model.has_finite_carrier() ? finite_points(model) : std::vector<Point>{};
    const std::uint64_t n = carrier.size();

    // Decodes instance i into k carrier points (exhaustive mixed radix) or k
    // sampled points; remaining radix digits land in `rest`.
    auto decode_points = [&](std::uint64_t i, std::size_t k, bool exhaust, SplitMix64& rng,
                             std::uint64_t& rest) {
        std::vector<Point> pts;
        if (exhaust) {
            for (std::size_t t = 0; t < k; ++t) {
                pts.push_back(carrier[static_cast<std::size_t>(i % n)]);
                i /= n;
            }
            rest = i;
        } else {
            pts = sampler.point_tuple(model, k, i, rng);
            rest = 0;
        }
        return pts;
    };

    std::vector<SubCheck> subs;

    // cs.1 (unit law, affine orientation): cc_0(x, y) = y.
    {
        const bool ex = exhaustive(model, n * n);
        const std::uint64_t total = ex ? n * n : sampler.budget;
        subs.push_back({"cs.1", total, [=, &model, &sampler](std::uint64_t i) {
            SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamCs + 0, i);
            std::uint64_t rest = 0;
            auto pts = decode_points(i, 2, ex, rng, rest);
            try {
                Point lhs = model.cc(Weight::zero(), pts[0], pts[1]);
                if (lhs == pts[1]) {
                    return InstanceResult::pass();
                }
                Json in;
                in["axiom"] = "cs.1";
                in["x"] = json_of(pts[0]);
                in["y"] = json_of(pts[1]);
                in["lambda"] = "0/1";
                return InstanceResult::fail(
                    make_failure(i, in, lhs.to_string(), pts[1].to_string()));
            } catch (const UnsupportedWeightError&) {
                return InstanceResult::skip();
            }
        }});
    }

    // cs.2 (idempotency): cc_lambda(x, x) = x.
    {
        const bool ex = exhaustive(model, n * g);
        const std::uint64_t total = ex ? n * g : sampler.budget;
        subs.push_back({"cs.2", total, [=, &model, &sampler](std::uint64_t i) {
            SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamCs + 1, i);
            std::uint64_t rest = 0;
            auto pts = decode_points(i, 1, ex, rng, rest);
            Weight lam = ex ? grid[static_cast<std::size_t>(rest % g)] : sampler.weight_at(rng);
            try {
                Point lhs = model.cc(lam, pts[0], pts[0]);
                if (lhs == pts[0]) {
                    return InstanceResult::pass();
                }
                Json in;
                in["axiom"] = "cs.2";
                in["x"] = json_of(pts[0]);
                in["lambda"] = lam.to_string();
                return InstanceResult::fail(
                    make_failure(i, in, lhs.to_string(), pts[0].to_string()));
            } catch (const UnsupportedWeightError&) {
                return InstanceResult::skip();
            }
        }});
    }

    // cs.3 (commutativity): cc_lambda(x, y) = cc_{1-lambda}(y, x).
    {
        const bool ex = exhaustive(model, n * n * g);
        const std::uint64_t total = ex ? n * n * g : sampler.budget;
        subs.push_back({"cs.3", total, [=, &model, &sampler](std::uint64_t i) {
            SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamCs + 2, i);
            std::uint64_t rest = 0;
            auto pts = decode_points(i, 2, ex, rng, rest);
            Weight lam = ex ? grid[static_cast<std::size_t>(rest % g)] : sampler.weight_at(rng);
            try {
                Point lhs = model.cc(lam, pts[0], pts[1]);
                Point rhs = model.cc(lam.complement(), pts[1], pts[0]);
                if (lhs == rhs) {
                    return InstanceResult::pass();
                }
                Json in;
                in["axiom"] = "cs.3";
                in["x"] = json_of(pts[0]);
                in["y"] = json_of(pts[1]);
                in["lambda"] = lam.to_string();
                return InstanceResult::fail(make_failure(i, in, lhs.to_string(), rhs.to_string()));
            } catch (const UnsupportedWeightError&) {
                return InstanceResult::skip();
            }
        }});
    }

    // cs.4 (associativity): cc_lambda(cc_mu(x,y), z) = cc_{lambda mu}(x, cc_nu(y,z)).
    // At lambda = mu = 1 the associated weight is arbitrary, so the identity
    // is checked for three distinct interior nu samples instead of one.
    {
        const bool ex = exhaustive(model, n * n * n * g * g);
        const std::uint64_t total = ex ? n * n * n * g * g : sampler.budget;
        const auto interior = sampler.interior_grid();
        subs.push_back({"cs.4", total, [=, &model, &sampler](std::uint64_t i) {
            SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamCs + 3, i);
            std::uint64_t rest = 0;
            auto pts = decode_points(i, 3, ex, rng, rest);
            Weight lam, mu;
            if (ex) {
                lam = grid[static_cast<std::size_t>(rest % g)];
                rest /= g;
                mu = grid[static_cast<std::size_t>(rest % g)];
            } else {
                lam = sampler.weight_at(rng);
                mu = sampler.weight_at(rng);
            }
            try {
                const Point inner = model.cc(mu, pts[0], pts[1]);
                const Point lhs = model.cc(lam, inner, pts[2]);
                std::vector<Weight> nus;
                if (lam.is_one() && mu.is_one()) {
                    std::vector<Weight> pool = interior.empty() ? grid : interior;
                    for (std::size_t t = 0; t < 3 && !pool.empty(); ++t) {
                        const std::size_t pick = static_cast<std::size_t>(rng.below(pool.size()));
                        nus.push_back(pool[pick]);
                        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
                    }
                } else {
                    nus.push_back(nu_assoc(lam, mu));
                }
                for (const auto& nu : nus) {
                    const Weight lam_mu(lam.value() * mu.value());
                    const Point rhs = model.cc(lam_mu, pts[0], model.cc(nu, pts[1], pts[2]));
                    if (lhs == rhs) {
                        continue;
                    }
                    Json in;
                    in["axiom"] = "cs.4";
                    in["x"] = json_of(pts[0]);
                    in["y"] = json_of(pts[1]);
                    in["z"] = json_of(pts[2]);
                    in["lambda"] = lam.to_string();
                    in["mu"] = mu.to_string();
                    in["nu"] = nu.to_string();
                    return InstanceResult::fail(
                        make_failure(i, in, lhs.to_string(), rhs.to_string()));
                }
                return InstanceResult::pass();
            } catch (const UnsupportedWeightError&) {
                return InstanceResult::skip();
            }
        }});
    }

    return run_subchecks("convex-space-axioms", subs, mode);
}

CheckReport check_gamma_axioms(const ConvexModel& model, const Sampler& sampler, ExecMode mode) {
    std::vector<SubCheck> subs;

    // gamma.1 (permutation invariance).
    subs.push_back({"gamma.1", sampler.budget, [&model, &sampler](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamGamma1, i);
        const std::size_t n = 2 + static_cast<std::size_t>(rng.below(4));
        try {
            const ProbDist mu = sampler.dist_at(n, rng);
            const auto pts = sampler.point_tuple(model, n, i, rng);
            // Fisher-Yates with index-derived randomness.
            std::vector<std::size_t> images(n);
            for (std::size_t t = 0; t < n; ++t) {
                images[t] = t;
            }
            for (std::size_t t = n; t > 1; --t) {
                std::swap(images[t - 1], images[static_cast<std::size_t>(rng.below(t))]);
            }
            const Permutation sigma(images);
            std::vector<Point> permuted;
            permuted.reserve(n);
            for (std::size_t t = 0; t < n; ++t) {
                permuted.push_back(pts[sigma(t)]);
            }
            const Point lhs = model.gamma(mu, pts);
            const Point rhs = model.gamma(permute(mu, sigma), permuted);
            if (lhs == rhs) {
                return InstanceResult::pass();
            }
            Json in;
            in["axiom"] = "gamma.1";
            in["mu"] = json_of(mu);
            Json pj = Json::array();
            for (const auto& p : pts) {
                pj.push_back(json_of(p));
            }
            in["points"] = pj;
            Json sj = Json::array();
            for (std::size_t t = 0; t < n; ++t) {
                sj.push_back(sigma(t));
            }
            in["sigma"] = sj;
            return InstanceResult::fail(make_failure(i, in, lhs.to_string(), rhs.to_string()));
        } catch (const UnsupportedWeightError&) {
            return InstanceResult::skip();
        }
    }});

    // gamma.2 (equal arguments merge).
    subs.push_back({"gamma.2", sampler.budget, [&model, &sampler](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamGamma2, i);
        const std::size_t n = 2 + static_cast<std::size_t>(rng.below(4));
        try {
            const ProbDist mu = sampler.dist_at(n, rng);
            auto pts = sampler.point_tuple(model, n, i, rng);
            pts[1] = pts[0];
            std::vector<Point> reduced;
            reduced.push_back(pts[0]);
            for (std::size_t t = 2; t < n; ++t) {
                reduced.push_back(pts[t]);
            }
            const Point lhs = model.gamma(mu, pts);
            const Point rhs = model.gamma(merge_first_two(mu), reduced);
            if (lhs == rhs) {
                return InstanceResult::pass();
            }
            Json in;
            in["axiom"] = "gamma.2";
            in["mu"] = json_of(mu);
            Json pj = Json::array();
            for (const auto& p : pts) {
                pj.push_back(json_of(p));
            }
            in["points"] = pj;
            return InstanceResult::fail(make_failure(i, in, lhs.to_string(), rhs.to_string()));
        } catch (const UnsupportedWeightError&) {
            return InstanceResult::skip();
        }
    }});

    // gamma.3 (Dirac law).
    subs.push_back({"gamma.3", sampler.budget, [&model, &sampler](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamGamma3, i);
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(5));
        const std::size_t at = static_cast<std::size_t>(rng.below(n));
        try {
            const ProbDist mu = ProbDist::dirac(n, at);
            const auto pts = sampler.point_tuple(model, n, i, rng);
            const Point lhs = model.gamma(mu, pts);
            if (lhs == pts[at]) {
                return InstanceResult::pass();
            }
            Json in;
            in["axiom"] = "gamma.3";
            in["mu"] = json_of(mu);
            Json pj = Json::array();
            for (const auto& p : pts) {
                pj.push_back(json_of(p));
            }
            in["points"] = pj;
            return InstanceResult::fail(make_failure(i, in, lhs.to_string(), pts[at].to_string()));
        } catch (const UnsupportedWeightError&) {
            return InstanceResult::skip();
        }
    }});

    // gamma.5 (product split).
    subs.push_back({"gamma.5", sampler.budget, [&model, &sampler](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamGamma5, i);
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(5));
        const std::size_t m = 1 + static_cast<std::size_t>(rng.below(3));
        try {
            const Weight nu1 = sampler.weight_at(rng);
            const ProbDist nu({nu1, nu1.complement()});
            const ProbDist mu = sampler.dist_at(n, rng);
            const ProbDist mu_tilde = sampler.dist_at(m, rng);
            auto pts = sampler.point_tuple(model, n, i, rng);
            auto pts_tilde = sampler.point_tuple(model, m, i, rng);
            const Point a = model.gamma(mu, pts);
            const Point b = model.gamma(mu_tilde, pts_tilde);
            const std::vector<Point> pair = {a, b};
            const Point lhs = model.gamma(nu, pair);
            std::vector<Point> joined = pts;
            joined.insert(joined.end(), pts_tilde.begin(), pts_tilde.end());
            const Point rhs = model.gamma(product_split(nu, mu, mu_tilde), joined);
            if (lhs == rhs) {
                return InstanceResult::pass();
            }
            Json in;
            in["axiom"] = "gamma.5";
            in["nu"] = json_of(nu);
            in["mu"] = json_of(mu);
            in["mu_tilde"] = json_of(mu_tilde);
            Json pj = Json::array();
            for (const auto& p : joined) {
                pj.push_back(json_of(p));
            }
            in["points"] = pj;
            return InstanceResult::fail(make_failure(i, in, lhs.to_string(), rhs.to_string()));
        } catch (const UnsupportedWeightError&) {
            return InstanceResult::skip();
        }
    }});

    return run_subchecks("gamma-axioms", subs, mode);
}

CheckReport check_metric_axiom(const ConvexModel& model, const Sampler& sampler, ExecMode mode) {
    (void)model.metric();  // NoMetricError for metric-free models

    std::vector<SubCheck> subs;

    // gamma.4: d(gamma_mu(x), gamma_mu(y)) <= sum mu(i) d(x_i, y_i).
    subs.push_back({"gamma.4", sampler.budget, [&model, &sampler](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamMetric, i);
        const std::size_t n = 1 + static_cast<std::size_t>(rng.below(4));
        try {
            const ProbDist mu = sampler.dist_at(n, rng);
            const auto xs = sampler.point_tuple(model, n, i, rng);
            const auto ys = sampler.point_tuple(model, n, i + 1, rng);
            const Rational lhs = model.distance(model.gamma(mu, xs), model.gamma(mu, ys));
            Rational rhs;
            for (std::size_t t = 0; t < n; ++t) {
                rhs += mu[t].value() * model.distance(xs[t], ys[t]);
            }
            if (lhs <= rhs) {
                return InstanceResult::pass();
            }
            Json in;
            in["axiom"] = "gamma.4";
            in["mu"] = json_of(mu);
            Json xj = Json::array();
            Json yj = Json::array();
            for (std::size_t t = 0; t < n; ++t) {
                xj.push_back(json_of(xs[t]));
                yj.push_back(json_of(ys[t]));
            }
            in["xs"] = xj;
            in["ys"] = yj;
            return InstanceResult::fail(make_failure(i, in, lhs.to_string(), rhs.to_string()));
        } catch (const UnsupportedWeightError&) {
            return InstanceResult::skip();
        }
    }});

    // Binary contraction: d(cc_lambda(y,x), cc_lambda(z,x)) <= lambda d(y,z).
    subs.push_back({"contraction", sampler.budget, [&model, &sampler](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamContraction, i);
        try {
            const auto pts = sampler.point_tuple(model, 3, i, rng);
            const Weight lam = sampler.weight_at(rng);
            const Rational lhs = model.distance(model.cc(lam, pts[1], pts[0]),
                                                model.cc(lam, pts[2], pts[0]));
            const Rational rhs = lam.value() * model.distance(pts[1], pts[2]);
            if (lhs <= rhs) {
                return InstanceResult::pass();
            }
            Json in;
            in["axiom"] = "contraction";
            in["x"] = json_of(pts[0]);
            in["y"] = json_of(pts[1]);
            in["z"] = json_of(pts[2]);
            in["lambda"] = lam.to_string();
            return InstanceResult::fail(make_failure(i, in, lhs.to_string(), rhs.to_string()));
        } catch (const UnsupportedWeightError&) {
            return InstanceResult::skip();
        }
    }});

    return run_subchecks("metric-compatibility", subs, mode);
}

CheckReport check_first_metric_condition(const ConvexModel& model, const Rational& c,
                                         const Sampler& sampler, ExecMode mode) {
    (void)model.metric();

    // Enumerated prefixes, extreme cases first: all Dirac-vs-Dirac pairs
    // over all generator pairs, then all pairs of length-2 grid
    // distributions over all generator pairs. The remainder is sampled with
    // n in 2..4.
    const std::vector<ProbDist> diracs = {ProbDist::dirac(2, 0), ProbDist::dirac(2, 1)};
    const auto dists2 = enumerate_grid_distributions(sampler.grid, 2);
    const auto gens = model.generator_points();
    const std::uint64_t d2 = dists2.size();
    const std::uint64_t gn = gens.size();
    const std::uint64_t dirac_prefix = 4 * gn * gn;
    std::uint64_t grid_prefix = d2 * d2 * gn * gn;
    if (grid_prefix > 8192) {
        grid_prefix = 0;
    }
    const std::uint64_t prefix = dirac_prefix + grid_prefix;
    const std::uint64_t total = prefix + sampler.budget;

    std::vector<Rational> ratios(static_cast<std::size_t>(total), Rational(0));

    auto eval = [&](std::uint64_t i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamFirstMetric, i);
        try {
            ProbDist mu = ProbDist::dirac(1, 0);
            ProbDist mu_tilde = ProbDist::dirac(1, 0);
            std::vector<Point> pts;
            if (i < dirac_prefix) {
                std::uint64_t rest = i;
                mu = diracs[static_cast<std::size_t>(rest % 2)];
                rest /= 2;
                mu_tilde = diracs[static_cast<std::size_t>(rest % 2)];
                rest /= 2;
                pts = {gens[static_cast<std::size_t>(rest % gn)],
                       gens[static_cast<std::size_t>(rest / gn)]};
            } else if (i < prefix) {
                std::uint64_t rest = i - dirac_prefix;
                mu = dists2[static_cast<std::size_t>(rest % d2)];
                rest /= d2;
                mu_tilde = dists2[static_cast<std::size_t>(rest % d2)];
                rest /= d2;
                pts = {gens[static_cast<std::size_t>(rest % gn)],
                       gens[static_cast<std::size_t>(rest / gn)]};
            } else {
                const std::size_t n = 2 + static_cast<std::size_t>(rng.below(3));
                mu = sampler.dist_at(n, rng);
                mu_tilde = sampler.dist_at(n, rng);
                pts = sampler.point_tuple(model, n, i - prefix, rng);
            }
            const Rational lhs = model.distance(model.gamma(mu, pts), model.gamma(mu_tilde, pts));
            const Rational gap = l1_distance(mu, mu_tilde);
            const Rational rhs = c * gap;
            if (!gap.is_zero()) {
                ratios[static_cast<std::size_t>(i)] = lhs / gap;
            }
            if (lhs <= rhs) {
                return InstanceResult::pass();
            }
            Json in;
            in["axiom"] = "first-metric-condition";
            in["mu"] = json_of(mu);
            in["mu_tilde"] = json_of(mu_tilde);
            Json pj = Json::array();
            for (const auto& p : pts) {
                pj.push_back(json_of(p));
            }
            in["points"] = pj;
            in["constant"] = c.to_string();
            return InstanceResult::fail(make_failure(i, in, lhs.to_string(), rhs.to_string()));
        } catch (const UnsupportedWeightError&) {
            return InstanceResult::skip();
        }
    };

    BatchResult r = run_batch(total, mode, eval);
    CheckReport report;
    report.check = "first-metric-condition";
    report.instances = r.instances;
    report.skipped = r.skipped;
    report.record(std::move(r.failures));
    Rational max_ratio;
    for (const auto& q : ratios) {
        if (q > max_ratio) {
            max_ratio = q;
        }
    }
    report.stats["constant"] = c.to_string();
    report.stats["max_ratio"] = max_ratio.to_string();
    return report;
}

std::optional<CancellationWitness> cancellation_search(const ConvexModel& model,
                                                       const Sampler& sampler) {
    const auto interior = sampler.interior_grid();
    if (interior.empty()) {
        return std::nullopt;
    }
    auto try_witness = [&](const Point& x, const Point& y, const Point& z,
                           const Weight& lam) -> bool {
        if (y == z) {
            return false;
        }
        try {
            return model.cc(lam, x, y) == model.cc(lam, x, z);
        } catch (const UnsupportedWeightError&) {
            return false;
        }
    };
    if (model.has_finite_carrier()) {
        const auto pts = finite_points(model);
        for (const auto& x : pts) {
            for (const auto& y : pts) {
                for (const auto& z : pts) {
                    for (const auto& lam : interior) {
                        if (try_witness(x, y, z, lam)) {
                            return CancellationWitness{x, y, z, lam};
                        }
                    }
                }
            }
        }
        return std::nullopt;
    }
    for (std::uint64_t i = 0; i < sampler.budget; ++i) {
        SplitMix64 rng = SplitMix64::at(sampler.seed, kStreamCancelSearch, i);
        const auto pts = sampler.point_tuple(model, 3, i, rng);
        const Weight lam = sampler.interior_weight_at(rng);
        if (try_witness(pts[0], pts[1], pts[2], lam)) {
            return CancellationWitness{pts[0], pts[1], pts[2], lam};
        }
    }
    return std::nullopt;
}

std::vector<Weight> lambda_sequence(const Weight& lambda0, std::size_t steps) {
    if (!lambda0.is_interior()) {
        throw DomainError("lambda sequence needs 0 < lambda0 < 1");
    }
    std::vector<Weight> seq;
    seq.reserve(steps);
    Rational lam = lambda0.value();
    for (std::size_t k = 0; k < steps; ++k) {
        lam = Rational(2) * lam / (Rational(1) + lam);
        seq.emplace_back(lam);
    }
    return seq;
}

CheckReport cancellation_propagation(const ConvexModel& model,
                                     const CancellationWitness& witness, std::size_t steps,
                                     const Sampler& sampler) {
    if (witness.y == witness.z || !witness.lambda.is_interior()) {
        throw WitnessError("witness must have y != z and interior lambda");
    }
    if (model.cc(witness.lambda, witness.x, witness.y) !=
        model.cc(witness.lambda, witness.x, witness.z)) {
        throw WitnessError("witness equation does not hold in the model");
    }

    // The witness has x in the first slot; the propagated equation keeps x
    // second, so the starting weight flips to its complement.
    const Weight start = witness.lambda.complement();
    auto equation_holds = [&](const Weight& w, std::string& lhs, std::string& rhs) {
        const Point a = model.cc(w, witness.y, witness.x);
        const Point b = model.cc(w, witness.z, witness.x);
        lhs = a.to_string();
        rhs = b.to_string();
        return a == b;
    };

    CheckReport report;
    report.check = "cancellation-propagation";
    report.stats["lambda_start"] = start.to_string();
    std::vector<Failure> failures;

    std::uint64_t idx = 0;
    auto run_one = [&](const Weight& w, const char* direction) {
        ++report.instances;
        std::string lhs, rhs;
        try {
            if (!equation_holds(w, lhs, rhs)) {
                Json in;
                in["direction"] = direction;
                in["lambda"] = w.to_string();
                in["witness"] = witness.to_json();
                failures.push_back(make_failure(idx, in, lhs, rhs));
            }
        } catch (const UnsupportedWeightError&) {
            ++report.skipped;
        }
        ++idx;
    };

    for (const auto& w : lambda_sequence(start, steps)) {
        run_one(w, "upward");
    }
    for (const auto& w : sampler.interior_grid()) {
        if (w < start) {
            run_one(w, "downward");
        }
    }
    report.record(std::move(failures));
    return report;
}

}  // namespace barycalc
