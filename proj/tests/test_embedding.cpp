#include "barycalc/embedding.hpp"

#include "barycalc/errors.hpp"
#include "barycalc/geometry.hpp"
#include "barycalc/sampler.hpp"

#include <doctest.h>

using namespace barycalc;

namespace {

Point pt(std::initializer_list<Rational> coords) { return Point::vector(Coordinates(coords)); }

ConvexModel two_chain() {
    return ConvexModel::semilattice({"a", "b"}, {{"a", "a"}, {"a", "b"}});
}

std::vector<Weight> weights(std::initializer_list<Rational> values) {
    std::vector<Weight> out;
    for (const auto& v : values) {
        out.emplace_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("carrier closure of the unit segment at grid {1/2}") {
    const auto model = ConvexModel::hull({{Rational(0)}, {Rational(1)}});
    const auto carrier = generate_carrier(
        model, model.generator_points(),
        weights({Rational(0), Rational(1, 2), Rational(1)}), 2);
    REQUIRE(carrier.size() == 5);
    CHECK(carrier.find(pt({Rational(0)})).has_value());
    CHECK(carrier.find(pt({Rational(1)})).has_value());
    CHECK(carrier.find(pt({Rational(1, 2)})).has_value());
    CHECK(carrier.find(pt({Rational(1, 4)})).has_value());
    CHECK(carrier.find(pt({Rational(3, 4)})).has_value());

    // Every provenance triple re-evaluates to the indexed point.
    for (std::size_t i = 0; i < carrier.size(); ++i) {
        const auto& prov = carrier.provenance(i);
        if (!prov) {
            continue;
        }
        CHECK(model.cc(prov->lambda, carrier.point(prov->x_index),
                       carrier.point(prov->y_index)) == carrier.point(i));
    }
}

TEST_CASE("carrier closure edge cases") {
    const auto lattice = two_chain();
    const auto closed = generate_carrier(lattice, lattice.generator_points(),
                                         dyadic_plus_thirds_grid(3), 1);
    CHECK(closed.size() == 2);

    const auto model = ConvexModel::hull({{Rational(0)}, {Rational(1)}});
    const auto depth0 = generate_carrier(model, model.generator_points(),
                                         dyadic_plus_thirds_grid(3), 0);
    CHECK(depth0.size() == 2);
}

TEST_CASE("relation rows and their zero-sum invariant") {
    const auto model = ConvexModel::hull({{Rational(0)}, {Rational(1)}});
    FiniteCarrier carrier;
    carrier.insert(pt({Rational(0)}), std::nullopt);
    carrier.insert(pt({Rational(1)}), std::nullopt);
    carrier.insert(pt({Rational(1, 2)}), std::nullopt);
    const auto rel = build_relations(carrier, model,
                                     weights({Rational(0), Rational(1, 2), Rational(1)}));
    // 3x3 pairs at one interior weight; midpoints of {0,1} stay inside.
    bool found_midpoint_row = false;
    for (const auto& row : rel.rows) {
        Rational sum;
        for (const auto& [col, val] : row.coefficients) {
            sum += val;
        }
        CHECK(sum == Rational(0));
        if (row.x == 0 && row.y == 1) {
            found_midpoint_row = true;
            CHECK(row.value == 2);
            CHECK(row.coefficients.at(2) == Rational(1));
            CHECK(row.coefficients.at(0) == Rational(-1, 2));
            CHECK(row.coefficients.at(1) == Rational(-1, 2));
        }
        if (row.x == row.y) {
            // Idempotent triple: all coefficients cancel.
            CHECK(row.coefficients.empty());
        }
    }
    CHECK(found_midpoint_row);
    CHECK(rel.escaped == 4);  // cc of 1/2 with an endpoint leaves the carrier
}

TEST_CASE("semilattice relations collapse the chain") {
    const auto model = two_chain();
    const auto carrier = generate_carrier(model, model.generator_points(),
                                          weights({Rational(1, 4), Rational(1, 2)}), 1);
    const auto rel = build_relations(carrier, model,
                                     weights({Rational(1, 4), Rational(1, 2)}));
    // Rows for (a,b,lambda): (1-lambda)(e_a - e_b); for (b,a,lambda):
    // lambda(e_a - e_b).
    const std::size_t a = *carrier.find(Point::element("a"));
    const std::size_t b = *carrier.find(Point::element("b"));
    bool found = false;
    for (const auto& row : rel.rows) {
        if (row.x == a && row.y == b && row.lambda == Weight(Rational(1, 4))) {
            CHECK(row.coefficients.at(a) == Rational(3, 4));
            CHECK(row.coefficients.at(b) == Rational(-3, 4));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("quotient of the midpoint relation") {
    const auto model = ConvexModel::hull({{Rational(0)}, {Rational(1)}});
    FiniteCarrier carrier;
    carrier.insert(pt({Rational(0)}), std::nullopt);
    carrier.insert(pt({Rational(1)}), std::nullopt);
    carrier.insert(pt({Rational(1, 2)}), std::nullopt);
    const auto rel = build_relations(carrier, model,
                                     weights({Rational(0), Rational(1, 2), Rational(1)}));
    const auto report = quotient_coordinates(rel, carrier);
    CHECK(report.quotient_dimension == 2);
    CHECK(report.injective);
    // The midpoint coordinate is the average of the endpoint coordinates.
    for (std::size_t d = 0; d < 2; ++d) {
        CHECK(report.coordinates[2][d] ==
              Rational(1, 2) * report.coordinates[0][d] +
                  Rational(1, 2) * report.coordinates[1][d]);
    }
}

TEST_CASE("quotient of the two-chain collapses a and b") {
    const auto model = two_chain();
    const auto carrier = generate_carrier(model, model.generator_points(),
                                          weights({Rational(1, 4), Rational(1, 2)}), 1);
    const auto rel = build_relations(carrier, model,
                                     weights({Rational(1, 4), Rational(1, 2)}));
    const auto report = quotient_coordinates(rel, carrier);
    CHECK(report.quotient_dimension == 1);
    CHECK(!report.injective);
    REQUIRE(report.collision_classes.size() == 1);
    CHECK(report.collision_classes[0] == std::vector<std::size_t>{0, 1});
    CHECK(report.coordinates[0] == report.coordinates[1]);
}

TEST_CASE("empty relation set leaves the free space untouched") {
    FiniteCarrier carrier;
    carrier.insert(Point::element("p"), std::nullopt);
    carrier.insert(Point::element("q"), std::nullopt);
    carrier.insert(Point::element("r"), std::nullopt);
    const auto report = quotient_coordinates(RelationSet{}, carrier);
    CHECK(report.quotient_dimension == 3);
    CHECK(report.injective);
    CHECK(report.complement_basis == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("verify_embedding on hull carriers") {
    const auto model = ConvexModel::hull(
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
    const auto grid = dyadic_plus_thirds_grid(3);
    const auto carrier = generate_carrier(model, model.generator_points(), grid, 1);
    const auto rel = build_relations(carrier, model, grid);
    const auto report = quotient_coordinates(rel, carrier);
    CHECK(report.injective);
    CHECK(report.quotient_dimension ==
          affine_dimension(model.generators()) + 1);
    const auto verification = verify_embedding(report, carrier, model, grid);
    CHECK(verification.affine.passed());
    CHECK(!verification.witness.has_value());
    CHECK(verification.passed());
}

TEST_CASE("verify_embedding attaches a witness on the two-chain") {
    const auto model = two_chain();
    const auto grid = dyadic_plus_thirds_grid(3);
    const auto carrier = generate_carrier(model, model.generator_points(), grid, 1);
    const auto rel = build_relations(carrier, model, grid);
    const auto report = quotient_coordinates(rel, carrier);
    CHECK(!report.injective);
    const auto verification = verify_embedding(report, carrier, model, grid);
    CHECK(verification.affine.passed());
    REQUIRE(verification.witness.has_value());
    const auto& w = *verification.witness;
    CHECK(w.y != w.z);
    CHECK(model.cc(w.lambda, w.x, w.y) == model.cc(w.lambda, w.x, w.z));
    CHECK(!verification.passed());
}

TEST_CASE("single point carrier embeds trivially") {
    const auto model = ConvexModel::hull({{Rational(2), Rational(3)}});
    const auto grid = dyadic_plus_thirds_grid(2);
    const auto carrier = generate_carrier(model, model.generator_points(), grid, 2);
    CHECK(carrier.size() == 1);
    const auto rel = build_relations(carrier, model, grid);
    const auto report = quotient_coordinates(rel, carrier);
    CHECK(report.quotient_dimension == 1);
    CHECK(report.injective);
    CHECK(verify_embedding(report, carrier, model, grid).passed());
}

TEST_CASE("quotient dimension matches affine dimension plus one on hulls") {
    const auto grid = dyadic_plus_thirds_grid(2);
    const std::vector<std::vector<Coordinates>> generator_sets = {
        {{Rational(0)}, {Rational(1)}},
        {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}},
        {{Rational(0), Rational(0)},
         {Rational(1), Rational(0)},
         {Rational(1), Rational(1)},
         {Rational(0), Rational(1)}},
        // Collinear triple: affine dimension 1, not 2.
        {{Rational(0)}, {Rational(1)}, {Rational(1, 2)}},
    };
    for (const auto& gens : generator_sets) {
        const auto model = ConvexModel::hull(gens);
        const auto carrier = generate_carrier(model, model.generator_points(), grid, 1);
        const auto report =
            quotient_coordinates(build_relations(carrier, model, grid), carrier);
        CHECK(report.quotient_dimension == affine_dimension(gens) + 1);
    }
}
