#include "barycalc/embedding.hpp"

#include "barycalc/errors.hpp"

#include <algorithm>

namespace barycalc {

namespace {

using SparseRow = std::map<std::size_t, Rational>;

void add_scaled(SparseRow& target, const Rational& factor, const SparseRow& source) {
    for (const auto& [col, val] : source) {
        Rational& slot = target[col];
        slot += factor * val;
        if (slot.is_zero()) {
            target.erase(col);
        }
    }
}

std::vector<Weight> interior_weights(const std::vector<Weight>& grid) {
    std::vector<Weight> interior;
    for (const auto& w : grid) {
        if (w.is_interior()) {
            interior.push_back(w);
        }
    }
    std::sort(interior.begin(), interior.end());
    interior.erase(std::unique(interior.begin(), interior.end()), interior.end());
    return interior;
}

}  // namespace

std::optional<std::size_t> FiniteCarrier::find(const Point& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

std::size_t FiniteCarrier::insert(Point p, std::optional<Provenance> prov) {
    auto it = index_.find(p);
    if (it != index_.end()) {
        return it->second;
    }
    const std::size_t idx = points_.size();
    index_.emplace(p, idx);
    points_.push_back(std::move(p));
    provenance_.push_back(std::move(prov));
    return idx;
}

Json FiniteCarrier::to_json() const {
    Json arr = Json::array();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        Json e;
        e["point"] = json_of(points_[i]);
        if (provenance_[i]) {
            Json p;
            p["lambda"] = provenance_[i]->lambda.to_string();
            p["x"] = provenance_[i]->x_index;
            p["y"] = provenance_[i]->y_index;
            e["provenance"] = p;
        } else {
            e["provenance"] = nullptr;
        }
        arr.push_back(e);
    }
    return arr;
}

FiniteCarrier generate_carrier(const ConvexModel& model, const std::vector<Point>& generators,
                               const std::vector<Weight>& grid, std::size_t depth) {
    FiniteCarrier carrier;
    for (const auto& g : generators) {
        carrier.insert(g, std::nullopt);
    }
    const auto interior = interior_weights(grid);
    for (std::size_t round = 0; round < depth; ++round) {
        const std::size_t snapshot = carrier.size();
        const std::size_t triples = snapshot * snapshot * interior.size();
        std::vector<Point> values(triples, Point::element(""));
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 256)
#endif
        for (std::int64_t t = 0; t < static_cast<std::int64_t>(triples); ++t) {
            std::size_t rest = static_cast<std::size_t>(t);
            const std::size_t i = rest % snapshot;
            rest /= snapshot;
            const std::size_t j = rest % snapshot;
            rest /= snapshot;
            values[static_cast<std::size_t>(t)] =
                model.cc(interior[rest], carrier.point(i), carrier.point(j));
        }
        for (std::size_t t = 0; t < triples; ++t) {
            std::size_t rest = t;
            const std::size_t i = rest % snapshot;
            rest /= snapshot;
            const std::size_t j = rest % snapshot;
            rest /= snapshot;
            carrier.insert(values[t], Provenance{interior[rest], i, j});
        }
    }
    return carrier;
}

RelationSet build_relations(const FiniteCarrier& carrier, const ConvexModel& model,
                            const std::vector<Weight>& grid) {
    const auto interior = interior_weights(grid);
    const std::size_t k = carrier.size();
    const std::size_t triples = k * k * interior.size();
    std::vector<std::optional<RelationRow>> slots(triples);
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic, 256)
#endif
    for (std::int64_t t = 0; t < static_cast<std::int64_t>(triples); ++t) {
        std::size_t rest = static_cast<std::size_t>(t);
        const std::size_t i = rest % k;
        rest /= k;
        const std::size_t j = rest % k;
        rest /= k;
        const Weight& lam = interior[rest];
        const Point value = model.cc(lam, carrier.point(i), carrier.point(j));
        const auto idx = carrier.find(value);
        if (!idx) {
            continue;
        }
        RelationRow row;
        row.x = i;
        row.y = j;
        row.lambda = lam;
        row.value = *idx;
        SparseRow coeffs;
        coeffs[*idx] += Rational(1);
        coeffs[i] -= lam.value();
        coeffs[j] -= lam.complement().value();
        for (auto it = coeffs.begin(); it != coeffs.end();) {
            it = it->second.is_zero() ? coeffs.erase(it) : std::next(it);
        }
        row.coefficients = std::move(coeffs);
        slots[static_cast<std::size_t>(t)] = std::move(row);
    }
    RelationSet out;
    out.rows.reserve(triples);
    for (auto& slot : slots) {
        if (slot) {
            out.rows.push_back(std::move(*slot));
        } else {
            ++out.escaped;
        }
    }
    return out;
}

EmbeddingReport quotient_coordinates(const RelationSet& relations, const FiniteCarrier& carrier) {
    const std::size_t k = carrier.size();

    // Incremental reduced row echelon form of the relation span. Every
    // basis row keeps support {own pivot} + free columns only, so reducing
    // an incoming row against each pivot column it touches fully reduces
    // it. Insertion order does not matter: the echelon form depends only on
    // the span, so the pivot/free split below is canonical.
    std::map<std::size_t, SparseRow> basis;  // pivot column -> normalized row
    for (const auto& rel : relations.rows) {
        SparseRow r = rel.coefficients;
        for (bool reduced = false; !reduced;) {
            reduced = true;
            for (const auto& [col, val] : r) {
                auto it = basis.find(col);
                if (it != basis.end()) {
                    add_scaled(r, -val, it->second);
                    reduced = false;
                    break;
                }
            }
        }
        if (r.empty()) {
            continue;  // dependent row
        }
        const std::size_t p = r.begin()->first;
        const Rational inv = r.begin()->second.reciprocal();
        for (auto& [col, val] : r) {
            val *= inv;
        }
        for (auto& [piv, row] : basis) {
            auto hit = row.find(p);
            if (hit != row.end()) {
                const Rational factor = -hit->second;
                add_scaled(row, factor, r);
            }
        }
        basis.emplace(p, std::move(r));
    }

    EmbeddingReport report;
    for (std::size_t col = 0; col < k; ++col) {
        if (!basis.count(col)) {
            report.complement_basis.push_back(col);
        }
    }
    report.quotient_dimension = report.complement_basis.size();

    std::map<std::size_t, std::size_t> position;
    for (std::size_t i = 0; i < report.complement_basis.size(); ++i) {
        position[report.complement_basis[i]] = i;
    }

    report.coordinates.assign(k, std::vector<Rational>(report.quotient_dimension, Rational(0)));
    for (std::size_t col = 0; col < k; ++col) {
        auto it = basis.find(col);
        if (it == basis.end()) {
            report.coordinates[col][position[col]] = Rational(1);
            continue;
        }
        // Pivot column: its echelon row reads e_col + sum over free columns,
        // so the class of e_col is minus the free part.
        for (const auto& [c, val] : it->second) {
            if (c == col) {
                continue;
            }
            report.coordinates[col][position[c]] = -val;
        }
    }

    std::map<std::vector<Rational>, std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < k; ++i) {
        classes[report.coordinates[i]].push_back(i);
    }
    for (auto& [coords, members] : classes) {
        report.collision_classes.push_back(members);
    }
    std::sort(report.collision_classes.begin(), report.collision_classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    report.injective = true;
    for (const auto& cls : report.collision_classes) {
        if (cls.size() > 1) {
            report.injective = false;
        }
    }
    return report;
}

Json EmbeddingReport::to_json() const {
    Json j;
    j["quotient_dimension"] = quotient_dimension;
    Json basis = Json::array();
    for (auto b : complement_basis) {
        basis.push_back(b);
    }
    j["complement_basis"] = basis;
    Json coords = Json::array();
    for (const auto& c : coordinates) {
        Json row = Json::array();
        for (const auto& v : c) {
            row.push_back(v.to_string());
        }
        coords.push_back(row);
    }
    j["coordinates"] = coords;
    Json classes = Json::array();
    for (const auto& cls : collision_classes) {
        Json members = Json::array();
        for (auto m : cls) {
            members.push_back(m);
        }
        classes.push_back(members);
    }
    j["collision_classes"] = classes;
    j["injective"] = injective;
    return j;
}

EmbeddingVerification verify_embedding(const EmbeddingReport& report,
                                       const FiniteCarrier& carrier, const ConvexModel& model,
                                       const std::vector<Weight>& grid, ExecMode mode) {
    const RelationSet relations = build_relations(carrier, model, grid);

    auto eval = [&](std::uint64_t i) {
        const RelationRow& rel = relations.rows[static_cast<std::size_t>(i)];
        const auto& cx = report.coordinates[rel.x];
        const auto& cy = report.coordinates[rel.y];
        const auto& cv = report.coordinates[rel.value];
        bool equal = true;
        for (std::size_t d = 0; d < cv.size() && equal; ++d) {
            equal = cv[d] == rel.lambda.value() * cx[d] + rel.lambda.complement().value() * cy[d];
        }
        if (equal) {
            return InstanceResult::pass();
        }
        Json in;
        in["x"] = rel.x;
        in["y"] = rel.y;
        in["lambda"] = rel.lambda.to_string();
        in["value"] = rel.value;
        Json lhs = Json::array();
        Json rhs = Json::array();
        for (std::size_t d = 0; d < cv.size(); ++d) {
            lhs.push_back(cv[d].to_string());
            rhs.push_back((rel.lambda.value() * cx[d] +
                           rel.lambda.complement().value() * cy[d]).to_string());
        }
        Failure f;
        f.instance = i;
        f.inputs = in;
        f.lhs = lhs.dump();
        f.rhs = rhs.dump();
        return InstanceResult::fail(std::move(f));
    };

    EmbeddingVerification out;
    BatchResult r = run_batch(relations.rows.size(), mode, eval);
    out.affine.check = "embedding-affine-consistency";
    out.affine.instances = r.instances;
    out.affine.skipped = r.skipped;
    out.affine.record(std::move(r.failures));

    if (!report.injective) {
        const auto interior = interior_weights(grid);
        for (const auto& cls : report.collision_classes) {
            if (cls.size() < 2) {
                continue;
            }
            for (std::size_t a = 0; a < cls.size() && !out.witness; ++a) {
                for (std::size_t b = a + 1; b < cls.size() && !out.witness; ++b) {
                    const Point& y = carrier.point(cls[a]);
                    const Point& z = carrier.point(cls[b]);
                    for (std::size_t xi = 0; xi < carrier.size() && !out.witness; ++xi) {
                        const Point& x = carrier.point(xi);
                        for (const auto& lam : interior) {
                            try {
                                if (model.cc(lam, x, y) == model.cc(lam, x, z)) {
                                    out.witness = CancellationWitness{x, y, z, lam};
                                    break;
                                }
                            } catch (const UnsupportedWeightError&) {
                            }
                        }
                    }
                }
            }
            if (out.witness) {
                break;
            }
        }
    }
    return out;
}

}  // namespace barycalc
