#pragma once

#include "barycalc/axioms.hpp"
#include "barycalc/batch.hpp"
#include "barycalc/model.hpp"
#include "barycalc/report.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace barycalc {

// How a non-generator carrier point was produced: cc_lambda(p[x], p[y]).
struct Provenance {
    Weight lambda;
    std::size_t x_index = 0;
    std::size_t y_index = 0;
};

// A finite, duplicate-free sample of a model's carrier, with provenance for
// every point discovered during closure.
class FiniteCarrier {
public:
    std::size_t size() const { return points_.size(); }
    const Point& point(std::size_t i) const { return points_[i]; }
    const std::vector<Point>& points() const { return points_; }
    std::optional<std::size_t> find(const Point& p) const;
    const std::optional<Provenance>& provenance(std::size_t i) const { return provenance_[i]; }

    // Inserts a canonical point if new; returns its index either way.
    std::size_t insert(Point p, std::optional<Provenance> prov);

    Json to_json() const;

private:
    std::vector<Point> points_;
    std::map<Point, std::size_t> index_;
    std::vector<std::optional<Provenance>> provenance_;
};

// Closes the generators under cc over the interior grid weights for `depth`
// rounds. Each round combines all pairs present at its start.
FiniteCarrier generate_carrier(const ConvexModel& model, const std::vector<Point>& generators,
                               const std::vector<Weight>& grid, std::size_t depth);

// One relation vector e_value - lambda*e_x - (1-lambda)*e_y, stored sparsely
// over carrier indices. Coefficients always sum to zero; the map drops
// entries that cancel, so an idempotent triple yields an empty map.
struct RelationRow {
    std::size_t x = 0;
    std::size_t y = 0;
    Weight lambda;
    std::size_t value = 0;
    std::map<std::size_t, Rational> coefficients;
};

struct RelationSet {
    std::vector<RelationRow> rows;
    std::uint64_t escaped = 0;  // triples whose cc value left the carrier
};

// Emits one row per (x, y, lambda) in carrier x carrier x interior grid
// whose cc value lies in the carrier; escaped triples are counted.
RelationSet build_relations(const FiniteCarrier& carrier, const ConvexModel& model,
                            const std::vector<Weight>& grid);

// Coordinates of every carrier point in the quotient of the free rational
// vector space by the relation span, expressed over the complement basis
// (the lexicographically earliest carrier indices not pivoted in the
// echelon form of the relation span).
struct EmbeddingReport {
    std::size_t quotient_dimension = 0;
    std::vector<std::size_t> complement_basis;
    std::vector<std::vector<Rational>> coordinates;
    std::vector<std::vector<std::size_t>> collision_classes;  // full partition
    bool injective = false;

    Json to_json() const;
};

EmbeddingReport quotient_coordinates(const RelationSet& relations, const FiniteCarrier& carrier);

struct EmbeddingVerification {
    CheckReport affine;
    std::optional<CancellationWitness> witness;

    bool passed() const { return affine.passed() && !witness.has_value(); }
};

// Replays every recorded relation through the quotient coordinates and
// asserts the exact convex-combination identity. When the report is not
// injective, searches the collision classes for a cancellation witness and
// attaches the first one found.
EmbeddingVerification verify_embedding(const EmbeddingReport& report,
                                       const FiniteCarrier& carrier, const ConvexModel& model,
                                       const std::vector<Weight>& grid,
                                       ExecMode mode = ExecMode::Parallel);

}  // namespace barycalc
