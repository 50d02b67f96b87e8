#include "barycalc/prob.hpp"

#include "barycalc/errors.hpp"

#include <algorithm>
#include <sstream>

namespace barycalc {

Weight::Weight(Rational v) : value_(std::move(v)) {
    if (value_.sign() < 0 || value_ > Rational(1)) {
        throw DomainError("weight " + value_.to_string() + " outside [0,1]");
    }
}

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw DomainError("permutation image list is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> im(n);
    for (std::size_t i = 0; i < n; ++i) {
        im[i] = i;
    }
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
    auto p = identity(n);
    std::swap(p.images_[i], p.images_[j]);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) {
        im[images_[i]] = i;
    }
    return Permutation(std::move(im));
}

ProbDist::ProbDist(std::vector<Weight> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) {
        throw DimensionError("distribution must have length >= 1");
    }
    Rational sum;
    for (const auto& w : weights_) {
        sum += w.value();
    }
    if (sum != Rational(1)) {
        throw DomainError("distribution weights sum to " + sum.to_string() + ", not 1");
    }
}

ProbDist ProbDist::dirac(std::size_t n, std::size_t index) {
    if (index >= n) {
        throw DimensionError("dirac index out of range");
    }
    std::vector<Weight> w(n, Weight::zero());
    w[index] = Weight::one();
    return ProbDist(std::move(w));
}

std::string ProbDist::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) {
            os << ", ";
        }
        os << weights_[i].to_string();
    }
    os << ")";
    return os.str();
}

Rational l1_distance(const ProbDist& mu, const ProbDist& nu) {
    if (mu.size() != nu.size()) {
        throw DimensionError("l1_distance requires equal lengths");
    }
    Rational sum;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        sum += (mu[i].value() - nu[i].value()).abs();
    }
    return sum;
}

ProbDist permute(const ProbDist& mu, const Permutation& sigma) {
    if (mu.size() != sigma.size()) {
        throw DimensionError("permutation length mismatch");
    }
    std::vector<Weight> w(mu.size(), Weight::zero());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        w[i] = mu[sigma(i)];
    }
    return ProbDist(std::move(w));
}

ProbDist merge_first_two(const ProbDist& mu) {
    if (mu.size() < 2) {
        throw DimensionError("merge_first_two requires length >= 2");
    }
    std::vector<Weight> w;
    w.reserve(mu.size() - 1);
    w.push_back(Weight(mu[0].value() + mu[1].value()));
    for (std::size_t j = 2; j < mu.size(); ++j) {
        w.push_back(mu[j]);
    }
    return ProbDist(std::move(w));
}

ProbDist product_split(const ProbDist& nu, const ProbDist& mu, const ProbDist& mu_tilde) {
    if (nu.size() != 2) {
        throw DimensionError("product_split requires a length-2 outer distribution");
    }
    std::vector<Weight> w;
    w.reserve(mu.size() + mu_tilde.size());
    for (std::size_t i = 0; i < mu.size(); ++i) {
        w.push_back(Weight(nu[0].value() * mu[i].value()));
    }
    for (std::size_t j = 0; j < mu_tilde.size(); ++j) {
        w.push_back(Weight(nu[1].value() * mu_tilde[j].value()));
    }
    return ProbDist(std::move(w));
}

std::pair<ProbDist, Weight> drop_last(const ProbDist& mu) {
    if (mu.size() < 2) {
        throw DimensionError("drop_last requires length >= 2");
    }
    const Weight& last = mu[mu.size() - 1];
    if (last.is_one()) {
        throw DegenerateDistributionError("cannot drop a final weight of 1");
    }
    const Rational rest = Rational(1) - last.value();
    std::vector<Weight> w;
    w.reserve(mu.size() - 1);
    for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
        w.push_back(Weight(mu[i].value() / rest));
    }
    return {ProbDist(std::move(w)), last};
}

}  // namespace barycalc
