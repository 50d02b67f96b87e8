#include "barycalc/model.hpp"

#include "barycalc/errors.hpp"
#include "barycalc/geometry.hpp"

#include <algorithm>

namespace barycalc {

Metric Metric::weighted_l1(std::vector<Rational> weights) {
    for (const auto& w : weights) {
        if (w.sign() <= 0) {
            throw DomainError("weighted_l1 weights must be strictly positive");
        }
    }
    return Metric(Kind::WeightedL1, std::move(weights));
}

std::string Metric::name() const {
    switch (kind_) {
        case Kind::L1: return "l1";
        case Kind::LInf: return "linf";
        case Kind::WeightedL1: return "weighted_l1";
    }
    return "?";
}

Rational Metric::norm(const Coordinates& v) const {
    switch (kind_) {
        case Kind::L1: {
            Rational s;
            for (const auto& c : v) {
                s += c.abs();
            }
            return s;
        }
        case Kind::LInf: {
            Rational m;
            for (const auto& c : v) {
                Rational a = c.abs();
                if (a > m) {
                    m = a;
                }
            }
            return m;
        }
        case Kind::WeightedL1: {
            if (weights_.size() != v.size()) {
                throw DimensionError("weighted_l1 weight count does not match dimension");
            }
            Rational s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                s += weights_[i] * v[i].abs();
            }
            return s;
        }
    }
    return Rational(0);
}

ConvexModel ConvexModel::hull(std::vector<Coordinates> generators, std::optional<Metric> metric) {
    if (generators.empty()) {
        throw DomainError("hull model needs at least one generator");
    }
    const std::size_t dim = generators[0].size();
    for (const auto& g : generators) {
        if (g.size() != dim) {
            throw DimensionError("hull generators have mixed dimensions");
        }
    }
    if (metric && metric->kind() == Metric::Kind::WeightedL1 && metric->weights().size() != dim) {
        throw DimensionError("weighted_l1 weight count does not match hull dimension");
    }
    ConvexModel m;
    m.kind_ = ModelKind::Hull;
    m.dimension_ = dim;
    m.generators_ = std::move(generators);
    m.metric_ = std::move(metric);
    return m;
}

ConvexModel ConvexModel::semilattice(std::vector<std::string> elements,
                                     const std::vector<std::vector<std::string>>& meet_table) {
    ConvexModel m;
    m.kind_ = ModelKind::Semilattice;
    m.elements_ = std::move(elements);
    const std::size_t n = m.elements_.size();
    if (n == 0) {
        throw DomainError("semilattice needs at least one element");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.element_index_.emplace(m.elements_[i], i).second) {
            throw DomainError("duplicate semilattice element '" + m.elements_[i] + "'");
        }
    }
    if (meet_table.size() != n) {
        throw DimensionError("meet table must have one row per element");
    }
    m.meet_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (meet_table[i].size() != n) {
            throw DimensionError("meet table row has wrong length");
        }
        for (std::size_t j = 0; j < n; ++j) {
            m.meet_[i * n + j] = m.element_index(meet_table[i][j]);
        }
    }
    // Meet must be idempotent, commutative and associative.
    for (std::size_t i = 0; i < n; ++i) {
        if (m.meet_[i * n + i] != i) {
            throw DomainError("meet table is not idempotent at '" + m.elements_[i] + "'");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (m.meet_[i * n + j] != m.meet_[j * n + i]) {
                throw DomainError("meet table is not commutative");
            }
            for (std::size_t k = 0; k < n; ++k) {
                if (m.meet_[m.meet_[i * n + j] * n + k] != m.meet_[i * n + m.meet_[j * n + k]]) {
                    throw DomainError("meet table is not associative");
                }
            }
        }
    }
    return m;
}

ConvexModel ConvexModel::table(std::vector<std::string> carrier, std::vector<Weight> grid,
                               const std::vector<TableEntry>& entries) {
    ConvexModel m;
    m.kind_ = ModelKind::Table;
    m.elements_ = std::move(carrier);
    const std::size_t n = m.elements_.size();
    if (n == 0) {
        throw DomainError("table model needs a nonempty carrier");
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!m.element_index_.emplace(m.elements_[i], i).second) {
            throw DomainError("duplicate table carrier element '" + m.elements_[i] + "'");
        }
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    if (grid.empty()) {
        throw DomainError("table model needs a nonempty weight grid");
    }
    m.table_grid_ = std::move(grid);
    for (const auto& e : entries) {
        const auto key = std::make_tuple(m.element_index(e.x), m.element_index(e.y),
                                         e.lambda.value());
        if (!std::binary_search(m.table_grid_.begin(), m.table_grid_.end(), e.lambda)) {
            throw DomainError("table entry at weight " + e.lambda.to_string() +
                              " outside the declared grid");
        }
        if (!m.table_cc_.emplace(key, m.element_index(e.value)).second) {
            throw DomainError("duplicate table entry for (" + e.x + ", " + e.y + ", " +
                              e.lambda.to_string() + ")");
        }
    }
    const std::size_t expected = n * n * m.table_grid_.size();
    if (m.table_cc_.size() != expected) {
        throw DomainError("table cc is not total: " + std::to_string(m.table_cc_.size()) +
                          " entries, expected " + std::to_string(expected));
    }
    return m;
}

std::string ConvexModel::kind_name() const {
    switch (kind_) {
        case ModelKind::Hull: return "hull";
        case ModelKind::Semilattice: return "semilattice";
        case ModelKind::Table: return "table";
    }
    return "?";
}

Coordinates ConvexModel::generator_centroid() const {
    if (kind_ != ModelKind::Hull) {
        throw DomainError("centroid is defined for hull models only");
    }
    Coordinates c(dimension_, Rational(0));
    for (const auto& g : generators_) {
        c = add(c, g);
    }
    const Rational inv(BigInt(1), BigInt(generators_.size()));
    return scaled(inv, c);
}

bool ConvexModel::contains(const Coordinates& p) const {
    if (kind_ != ModelKind::Hull) {
        throw DomainError("hull membership is defined for hull models only");
    }
    if (p.size() != dimension_) {
        throw DimensionError("point dimension does not match hull dimension");
    }
    return hull_contains(generators_, p);
}

const Metric& ConvexModel::metric() const {
    if (!metric_) {
        throw NoMetricError("model has no metric");
    }
    return *metric_;
}

Rational ConvexModel::distance(const Point& x, const Point& y) const {
    return metric().distance(checked_coords(x), checked_coords(y));
}

Rational ConvexModel::norm(const Coordinates& v) const {
    if (v.size() != dimension_) {
        throw DimensionError("vector dimension does not match hull dimension");
    }
    return metric().norm(v);
}

std::vector<Point> ConvexModel::generator_points() const {
    std::vector<Point> pts;
    if (kind_ == ModelKind::Hull) {
        pts.reserve(generators_.size());
        for (const auto& g : generators_) {
            pts.push_back(Point::vector(g));
        }
    } else {
        pts.reserve(elements_.size());
        for (const auto& e : elements_) {
            pts.push_back(Point::element(e));
        }
    }
    return pts;
}

std::size_t ConvexModel::element_index(const std::string& id) const {
    auto it = element_index_.find(id);
    if (it == element_index_.end()) {
        throw DomainError("element '" + id + "' is not in the carrier");
    }
    return it->second;
}

const Coordinates& ConvexModel::checked_coords(const Point& p) const {
    if (!p.is_vector()) {
        throw DomainError("expected a coordinate point in a hull model");
    }
    if (p.coords().size() != dimension_) {
        throw DimensionError("point dimension does not match hull dimension");
    }
    return p.coords();
}

Point ConvexModel::cc(const Weight& lambda, const Point& x, const Point& y) const {
    switch (kind_) {
        case ModelKind::Hull: {
            const Coordinates& a = checked_coords(x);
            const Coordinates& b = checked_coords(y);
            return Point::vector(
                add(scaled(lambda.value(), a), scaled(lambda.complement().value(), b)));
        }
        case ModelKind::Semilattice: {
            const std::size_t i = element_index(x.element_id());
            const std::size_t j = element_index(y.element_id());
            if (lambda.is_one()) {
                return x;
            }
            if (lambda.is_zero()) {
                return y;
            }
            return Point::element(elements_[meet_[i * elements_.size() + j]]);
        }
        case ModelKind::Table: {
            const std::size_t i = element_index(x.element_id());
            const std::size_t j = element_index(y.element_id());
            auto it = table_cc_.find(std::make_tuple(i, j, lambda.value()));
            if (it == table_cc_.end()) {
                throw UnsupportedWeightError("table has no entry at weight " +
                                             lambda.to_string());
            }
            return Point::element(elements_[it->second]);
        }
    }
    throw Error("unreachable model kind");
}

Point ConvexModel::gamma(const ProbDist& mu, std::span<const Point> points) const {
    if (mu.size() != points.size()) {
        throw DimensionError("gamma: distribution length does not match point count");
    }
    const std::size_t n = mu.size();
    if (mu[n - 1].is_one()) {
        return points[n - 1];
    }
    auto [nu, last] = drop_last(mu);
    return cc(last.complement(), gamma(nu, points.first(n - 1)), points[n - 1]);
}

Weight nu_assoc(const Weight& lambda, const Weight& mu) {
    if (lambda.is_one() && mu.is_one()) {
        throw DegenerateAssociativityError("nu is arbitrary at lambda = mu = 1");
    }
    const Rational num = lambda.value() * mu.complement().value();
    const Rational den = Rational(1) - lambda.value() * mu.value();
    return Weight(num / den);
}

}  // namespace barycalc
