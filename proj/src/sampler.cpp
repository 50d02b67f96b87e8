#include "barycalc/sampler.hpp"

#include "barycalc/errors.hpp"

#include <algorithm>

namespace barycalc {

std::vector<Weight> dyadic_plus_thirds_grid(unsigned max_pow) {
    std::vector<Weight> grid;
    const long long den = 1LL << max_pow;
    for (long long k = 0; k <= den; ++k) {
        grid.emplace_back(Rational(k, den));
    }
    grid.emplace_back(Rational(1, 3));
    grid.emplace_back(Rational(2, 3));
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

namespace {

void enumerate_rec(const std::vector<Weight>& grid, std::size_t n, const Rational& remaining,
                   std::vector<Weight>& prefix, std::vector<ProbDist>& out) {
    if (prefix.size() + 1 == n) {
        // Final weight is forced; it must itself be a grid value.
        if (remaining.sign() < 0 || remaining > Rational(1)) {
            return;
        }
        const Weight last{remaining};
        if (!std::binary_search(grid.begin(), grid.end(), last)) {
            return;
        }
        std::vector<Weight> w = prefix;
        w.push_back(last);
        out.emplace_back(std::move(w));
        return;
    }
    for (const auto& g : grid) {
        if (g.value() > remaining) {
            break;  // grid sorted ascending
        }
        prefix.push_back(g);
        enumerate_rec(grid, n, remaining - g.value(), prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ProbDist> enumerate_grid_distributions(const std::vector<Weight>& grid,
                                                   std::size_t n) {
    if (n == 0) {
        throw DimensionError("distributions have length >= 1");
    }
    std::vector<Weight> sorted = grid;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<ProbDist> out;
    std::vector<Weight> prefix;
    enumerate_rec(sorted, n, Rational(1), prefix, out);
    return out;
}

Sampler::Sampler(std::uint64_t seed_, std::vector<Weight> grid_, std::size_t budget_)
    : seed(seed_), grid(std::move(grid_)), budget(budget_) {
    if (budget == 0) {
        throw DomainError("sampler budget must be positive");
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.empty()) {
        throw DomainError("sampler grid must be nonempty");
    }
}

std::vector<Weight> Sampler::interior_grid() const {
    std::vector<Weight> interior;
    for (const auto& w : grid) {
        if (w.is_interior()) {
            interior.push_back(w);
        }
    }
    return interior;
}

Weight Sampler::weight_at(SplitMix64& rng) const {
    return grid[static_cast<std::size_t>(rng.below(grid.size()))];
}

Weight Sampler::interior_weight_at(SplitMix64& rng) const {
    const auto interior = interior_grid();
    if (interior.empty()) {
        throw DomainError("grid has no interior weights");
    }
    return interior[static_cast<std::size_t>(rng.below(interior.size()))];
}

Point Sampler::point_at(const ConvexModel& model, SplitMix64& rng) const {
    if (model.has_finite_carrier()) {
        const auto& elems = model.elements();
        return Point::element(elems[static_cast<std::size_t>(rng.below(elems.size()))]);
    }
    const auto& gens = model.generators();
    // Integer masses 0..8 per generator, normalized; keeps denominators small.
    std::vector<long long> mass(gens.size());
    long long total = 0;
    for (auto& m : mass) {
        m = static_cast<long long>(rng.below(9));
        total += m;
    }
    if (total == 0) {
        return Point::vector(gens[static_cast<std::size_t>(rng.below(gens.size()))]);
    }
    Coordinates c(model.dimension(), Rational(0));
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (mass[i]) {
            c = add(c, scaled(Rational(mass[i], total), gens[i]));
        }
    }
    return Point::vector(std::move(c));
}

std::uint64_t Sampler::tuple_enumeration_prefix(const ConvexModel& model, std::size_t k) const {
    constexpr std::uint64_t kPrefixCap = 4096;
    const std::uint64_t base = model.has_finite_carrier()
                                   ? static_cast<std::uint64_t>(model.elements().size())
                                   : static_cast<std::uint64_t>(model.generators().size());
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > kPrefixCap / std::max<std::uint64_t>(base, 1)) {
            return 0;  // enumeration would overflow the cap; sample everything
        }
        total *= base;
    }
    return total <= kPrefixCap ? total : 0;
}

std::vector<Point> Sampler::point_tuple(const ConvexModel& model, std::size_t k,
                                        std::uint64_t index, SplitMix64& rng) const {
    std::vector<Point> pts;
    pts.reserve(k);
    const std::uint64_t prefix = tuple_enumeration_prefix(model, k);
    if (index < prefix) {
        const auto base_points = model.generator_points();
        std::uint64_t rem = index;
        for (std::size_t i = 0; i < k; ++i) {
            pts.push_back(base_points[static_cast<std::size_t>(rem % base_points.size())]);
            rem /= base_points.size();
        }
        return pts;
    }
    for (std::size_t i = 0; i < k; ++i) {
        pts.push_back(point_at(model, rng));
    }
    return pts;
}

ProbDist Sampler::dist_at(std::size_t n, SplitMix64& rng) const {
    constexpr long long kDen = 48;
    // Random composition of kDen into n ordered nonnegative parts.
    std::vector<long long> cuts(n - 1);
    for (auto& c : cuts) {
        c = static_cast<long long>(rng.below(kDen + 1));
    }
    std::sort(cuts.begin(), cuts.end());
    std::vector<Weight> w;
    w.reserve(n);
    long long prev = 0;
    for (long long c : cuts) {
        w.emplace_back(Rational(c - prev, kDen));
        prev = c;
    }
    w.emplace_back(Rational(kDen - prev, kDen));
    return ProbDist(std::move(w));
}

}  // namespace barycalc
