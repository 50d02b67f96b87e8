#pragma once

#include "barycalc/point.hpp"
#include "barycalc/prob.hpp"
#include "barycalc/rational.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

namespace barycalc {

// Exact metrics with rational values on rational vectors. Euclidean l2 is
// deliberately absent: its values are irrational and would force tolerances
// into an otherwise exact system.
class Metric {
public:
    enum class Kind { L1, LInf, WeightedL1 };

    static Metric l1() { return Metric(Kind::L1, {}); }
    static Metric linf() { return Metric(Kind::LInf, {}); }
    static Metric weighted_l1(std::vector<Rational> weights);

    Kind kind() const { return kind_; }
    const std::vector<Rational>& weights() const { return weights_; }
    std::string name() const;

    Rational norm(const Coordinates& v) const;
    Rational distance(const Coordinates& a, const Coordinates& b) const { return norm(sub(a, b)); }

private:
    Metric(Kind k, std::vector<Rational> w) : kind_(k), weights_(std::move(w)) {}

    Kind kind_;
    std::vector<Rational> weights_;
};

enum class ModelKind { Hull, Semilattice, Table };

struct TableEntry {
    std::string x;
    std::string y;
    Weight lambda;
    std::string value;
};

// A carrier with a binary operation cc indexed by weights in [0,1], plus an
// optional exact metric. Three concrete kinds:
//   Hull         - the convex hull of rational generator points; cc is the
//                  exact affine combination lambda*x + (1-lambda)*y.
//   Semilattice  - a finite meet-semilattice; cc is the meet for every
//                  interior weight, with cc_1(x,y)=x and cc_0(x,y)=y.
//   Table        - a finite carrier with explicitly recorded cc values over
//                  a declared weight grid; off-grid queries are errors, not
//                  interpolations.
// Models are immutable after construction; all operations are pure.
class ConvexModel {
public:
    // Empty placeholder; build real models through the factories below.
    ConvexModel() = default;

    static ConvexModel hull(std::vector<Coordinates> generators,
                            std::optional<Metric> metric = std::nullopt);
    static ConvexModel semilattice(std::vector<std::string> elements,
                                   const std::vector<std::vector<std::string>>& meet_table);
    static ConvexModel table(std::vector<std::string> carrier, std::vector<Weight> grid,
                             const std::vector<TableEntry>& entries);

    ModelKind kind() const { return kind_; }
    std::string kind_name() const;

    // Hull accessors.
    std::size_t dimension() const { return dimension_; }
    const std::vector<Coordinates>& generators() const { return generators_; }
    Coordinates generator_centroid() const;

    // Exact membership of a coordinate vector in the generator hull.
    bool contains(const Coordinates& p) const;

    bool has_metric() const { return metric_.has_value(); }
    const Metric& metric() const;
    Rational distance(const Point& x, const Point& y) const;
    Rational norm(const Coordinates& v) const;

    // Finite-model accessors. Hull models have no finite carrier.
    bool has_finite_carrier() const { return kind_ != ModelKind::Hull; }
    const std::vector<std::string>& elements() const { return elements_; }
    const std::vector<Weight>& table_grid() const { return table_grid_; }

    // Generator points: hull generators for hull models, the whole carrier
    // for finite models.
    std::vector<Point> generator_points() const;

    // The binary convex combination with weight lambda on x.
    Point cc(const Weight& lambda, const Point& x, const Point& y) const;

    // The derived n-ary combination, built recursively from cc: the final
    // point enters with weight mu(n-1), the rest recurse on the renormalized
    // prefix. Length-1 distributions return their single point.
    Point gamma(const ProbDist& mu, std::span<const Point> points) const;

private:
    std::size_t element_index(const std::string& id) const;
    const Coordinates& checked_coords(const Point& p) const;

    ModelKind kind_ = ModelKind::Hull;

    // Hull state.
    std::size_t dimension_ = 0;
    std::vector<Coordinates> generators_;
    std::optional<Metric> metric_;

    // Finite-carrier state.
    std::vector<std::string> elements_;
    std::map<std::string, std::size_t> element_index_;
    std::vector<std::size_t> meet_;  // row-major n*n meet table
    std::vector<Weight> table_grid_;
    std::map<std::tuple<std::size_t, std::size_t, Rational>, std::size_t> table_cc_;
};

// The weight nu that re-associates nested binary combinations:
// cc_lambda(cc_mu(x,y), z) = cc_{lambda*mu}(x, cc_nu(y,z)) with
// nu = lambda(1-mu)/(1-lambda*mu). Undefined at lambda = mu = 1, where any
// nu satisfies the identity; that case throws and callers branch.
Weight nu_assoc(const Weight& lambda, const Weight& mu);

}  // namespace barycalc
