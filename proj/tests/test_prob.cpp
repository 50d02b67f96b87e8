#include "barycalc/prob.hpp"

#include "barycalc/errors.hpp"
#include "barycalc/rng.hpp"
#include "barycalc/sampler.hpp"

#include <doctest.h>

using namespace barycalc;

namespace {

ProbDist dist(std::initializer_list<Rational> values) {
    std::vector<Weight> w;
    for (const auto& v : values) {
        w.emplace_back(v);
    }
    return ProbDist(std::move(w));
}

}  // namespace

TEST_CASE("weights are confined to [0,1]") {
    CHECK_THROWS_AS(Weight(Rational(-1, 2)), DomainError);
    CHECK_THROWS_AS(Weight(Rational(3, 2)), DomainError);
    CHECK(Weight(Rational(1, 3)).complement() == Weight(Rational(2, 3)));
    CHECK(Weight::zero().is_zero());
    CHECK(Weight::one().is_one());
    CHECK(Weight(Rational(1, 2)).is_interior());
}

TEST_CASE("distributions must sum to exactly one") {
    CHECK_THROWS_AS(dist({Rational(1, 2), Rational(1, 3)}), DomainError);
    CHECK_THROWS_AS(ProbDist(std::vector<Weight>{}), DimensionError);
    CHECK(ProbDist::dirac(3, 1) == dist({Rational(0), Rational(1), Rational(0)}));
}

TEST_CASE("l1 distance") {
    CHECK(l1_distance(dist({Rational(1), Rational(0)}), dist({Rational(1), Rational(0)})) ==
          Rational(0));
    CHECK(l1_distance(dist({Rational(1), Rational(0)}), dist({Rational(0), Rational(1)})) ==
          Rational(2));
    CHECK(l1_distance(dist({Rational(1, 2), Rational(1, 4), Rational(1, 4)}),
                      dist({Rational(1, 4), Rational(1, 2), Rational(1, 4)})) == Rational(1, 2));
    CHECK_THROWS_AS(l1_distance(dist({Rational(1)}), dist({Rational(1), Rational(0)})),
                    DimensionError);
}

TEST_CASE("l1 distance is a metric on a dyadic grid") {
    const auto grid = dyadic_plus_thirds_grid(2);
    const auto dists = enumerate_grid_distributions(grid, 2);
    for (const auto& a : dists) {
        CHECK(l1_distance(a, a) == Rational(0));
        for (const auto& b : dists) {
            const Rational ab = l1_distance(a, b);
            CHECK(ab == l1_distance(b, a));
            if (!(a == b)) {
                CHECK(ab.sign() > 0);
            }
            for (const auto& c : dists) {
                CHECK(l1_distance(a, c) <= ab + l1_distance(b, c));
            }
        }
    }
}

TEST_CASE("permute composes by index") {
    const ProbDist mu = dist({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
    CHECK(permute(mu, Permutation::identity(3)) == mu);
    CHECK(permute(mu, Permutation::transposition(3, 0, 1)) ==
          dist({Rational(1, 3), Rational(1, 2), Rational(1, 6)}));
    CHECK(permute(dist({Rational(1), Rational(0)}), Permutation::transposition(2, 0, 1)) ==
          dist({Rational(0), Rational(1)}));
    CHECK_THROWS_AS(permute(mu, Permutation::identity(2)), DimensionError);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
}

TEST_CASE("permute then inverse is the identity") {
    SplitMix64 rng(11);
    const Sampler sampler(11, dyadic_plus_thirds_grid(3), 64);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng.below(5);
        const ProbDist mu = sampler.dist_at(n, rng);
        std::vector<std::size_t> images(n);
        for (std::size_t i = 0; i < n; ++i) {
            images[i] = i;
        }
        for (std::size_t i = n; i > 1; --i) {
            std::swap(images[i - 1], images[rng.below(i)]);
        }
        const Permutation sigma(images);
        CHECK(permute(permute(mu, sigma), sigma.inverse()) == mu);
    }
}

TEST_CASE("merge_first_two") {
    CHECK(merge_first_two(dist({Rational(1, 5), Rational(3, 10), Rational(1, 2)})) ==
          dist({Rational(1, 2), Rational(1, 2)}));
    CHECK(merge_first_two(dist({Rational(1), Rational(0)})) == dist({Rational(1)}));
    CHECK(merge_first_two(dist({Rational(1, 2), Rational(1, 2)})) == dist({Rational(1)}));
    CHECK_THROWS_AS(merge_first_two(dist({Rational(1)})), DimensionError);
}

TEST_CASE("product_split") {
    CHECK(product_split(dist({Rational(1, 2), Rational(1, 2)}), dist({Rational(1)}),
                        dist({Rational(1)})) == dist({Rational(1, 2), Rational(1, 2)}));
    CHECK(product_split(dist({Rational(1), Rational(0)}),
                        dist({Rational(1, 3), Rational(2, 3)}), dist({Rational(1)})) ==
          dist({Rational(1, 3), Rational(2, 3), Rational(0)}));
    CHECK(product_split(dist({Rational(1, 2), Rational(1, 2)}),
                        dist({Rational(1, 2), Rational(1, 2)}),
                        dist({Rational(1, 3), Rational(2, 3)})) ==
          dist({Rational(1, 4), Rational(1, 4), Rational(1, 6), Rational(1, 3)}));
    CHECK_THROWS_AS(product_split(dist({Rational(1)}), dist({Rational(1)}), dist({Rational(1)})),
                    DimensionError);
}

TEST_CASE("product_split output always sums to one") {
    SplitMix64 rng(23);
    const Sampler sampler(23, dyadic_plus_thirds_grid(3), 64);
    for (int trial = 0; trial < 200; ++trial) {
        const Weight nu1 = sampler.weight_at(rng);
        const ProbDist nu({nu1, nu1.complement()});
        const ProbDist mu = sampler.dist_at(1 + rng.below(5), rng);
        const ProbDist mt = sampler.dist_at(1 + rng.below(4), rng);
        // The ProbDist constructor itself asserts the exact unit sum.
        const ProbDist eta = product_split(nu, mu, mt);
        CHECK(eta.size() == mu.size() + mt.size());
    }
}

TEST_CASE("drop_last splits off the final weight") {
    {
        const auto [nu, w] = drop_last(dist({Rational(1, 2), Rational(1, 4), Rational(1, 4)}));
        CHECK(nu == dist({Rational(2, 3), Rational(1, 3)}));
        CHECK(w == Weight(Rational(1, 4)));
    }
    {
        const auto [nu, w] = drop_last(dist({Rational(1, 2), Rational(1, 2)}));
        CHECK(nu == dist({Rational(1)}));
        CHECK(w == Weight(Rational(1, 2)));
    }
    CHECK_THROWS_AS(drop_last(dist({Rational(0), Rational(0), Rational(1)})),
                    DegenerateDistributionError);
}

TEST_CASE("drop_last reassembles exactly") {
    SplitMix64 rng(31);
    const Sampler sampler(31, dyadic_plus_thirds_grid(3), 64);
    for (int trial = 0; trial < 200; ++trial) {
        const ProbDist mu = sampler.dist_at(2 + rng.below(4), rng);
        if (mu[mu.size() - 1].is_one()) {
            continue;
        }
        const auto [nu, w] = drop_last(mu);
        std::vector<Weight> re;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            re.emplace_back(w.complement().value() * nu[i].value());
        }
        re.push_back(w);
        CHECK(ProbDist(re) == mu);
    }
}

TEST_CASE("grid distribution enumeration is exhaustive and exact") {
    const auto grid = dyadic_plus_thirds_grid(2);  // 0,1/4,1/3,1/2,2/3,3/4,1
    const auto d1 = enumerate_grid_distributions(grid, 1);
    CHECK(d1.size() == 1);
    const auto d2 = enumerate_grid_distributions(grid, 2);
    // Pairs summing to 1: (0,1),(1/4,3/4),(1/3,2/3),(1/2,1/2),(2/3,1/3),(3/4,1/4),(1,0).
    CHECK(d2.size() == 7);
    for (const auto& d : enumerate_grid_distributions(grid, 3)) {
        Rational sum;
        for (const auto& w : d.weights()) {
            sum += w.value();
        }
        CHECK(sum == Rational(1));
    }
}
