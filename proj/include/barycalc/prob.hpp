#pragma once

#include "barycalc/rational.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace barycalc {

// A convex weight: a rational confined to [0,1].
class Weight {
public:
    Weight() : value_(0) {}
    explicit Weight(Rational v);

    static Weight zero() { return Weight(); }
    static Weight one() { return Weight(Rational(1)); }
    static Weight from_string(std::string_view text) { return Weight(Rational::from_string(text)); }

    const Rational& value() const { return value_; }
    Weight complement() const { return Weight(Rational(1) - value_); }

    bool is_zero() const { return value_.is_zero(); }
    bool is_one() const { return value_ == Rational(1); }
    bool is_interior() const { return !is_zero() && !is_one(); }

    std::string to_string() const { return value_.to_string(); }

    friend bool operator==(const Weight& a, const Weight& b) { return a.value_ == b.value_; }
    friend bool operator!=(const Weight& a, const Weight& b) { return a.value_ != b.value_; }
    friend bool operator<(const Weight& a, const Weight& b) { return a.value_ < b.value_; }

private:
    Rational value_;
};

// A bijection of {0,...,n-1}, stored as its image list.
class Permutation {
public:
    explicit Permutation(std::vector<std::size_t> images);

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);

    std::size_t size() const { return images_.size(); }
    std::size_t operator()(std::size_t i) const { return images_[i]; }
    Permutation inverse() const;

private:
    std::vector<std::size_t> images_;
};

// Finite probability distribution: ordered weights of fixed length n >= 1
// summing to exactly 1.
class ProbDist {
public:
    explicit ProbDist(std::vector<Weight> weights);

    static ProbDist dirac(std::size_t n, std::size_t index);

    std::size_t size() const { return weights_.size(); }
    const Weight& operator[](std::size_t i) const { return weights_[i]; }
    const std::vector<Weight>& weights() const { return weights_; }

    std::string to_string() const;

    friend bool operator==(const ProbDist& a, const ProbDist& b) {
        return a.weights_ == b.weights_;
    }

private:
    std::vector<Weight> weights_;
};

// Exact l1 distance between equal-length distributions.
Rational l1_distance(const ProbDist& mu, const ProbDist& nu);

// Entry i of the result is mu(sigma(i)).
ProbDist permute(const ProbDist& mu, const Permutation& sigma);

// Collapses the first two weights into one; requires length >= 2.
ProbDist merge_first_two(const ProbDist& mu);

// Concatenated distribution eta with eta(i) = nu(0) * mu(i) on the first
// block and eta(n+j) = nu(1) * mu_tilde(j) on the second; nu has length 2.
ProbDist product_split(const ProbDist& nu, const ProbDist& mu, const ProbDist& mu_tilde);

// Splits off the final weight: returns (nu, w) where w = mu(n-1) and
// nu(i) = mu(i) / (1 - w). Throws DegenerateDistributionError when w = 1.
std::pair<ProbDist, Weight> drop_last(const ProbDist& mu);

}  // namespace barycalc
