#include <doctest.h>

#include "unitgraph/catalog.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/structure.hpp"

using namespace unitgraph;

namespace {

std::vector<Elem> members(const IdealSet& i) { return i.elements.to_vector(); }

}  // namespace

TEST_CASE("principal left ideals") {
    const auto z6 = FiniteRing::realize("Z6");
    CHECK(members(principal_left_ideal(z6, 2)) == std::vector<Elem>{0, 2, 4});
    CHECK(members(principal_left_ideal(z6, 0)) == std::vector<Elem>{0});
    const auto m = FiniteRing::realize("M2(Z2)");
    const auto e11 = m.compose(std::vector<Elem>{1, 0, 0, 0});
    const auto ideal = principal_left_ideal(m, e11);
    CHECK(ideal.size() == 4);
    ideal.elements.for_each([&](Elem a) {
        const auto c = m.components(a);
        CHECK(c[1] == 0);  // second column zero
        CHECK(c[3] == 0);
    });
}

TEST_CASE("maximal left ideals") {
    const auto z6 = FiniteRing::realize("Z6");
    const auto max6 = maximal_left_ideals(z6);
    REQUIRE(max6.size() == 2);
    CHECK(members(max6[0]) == std::vector<Elem>{0, 2, 4});
    CHECK(members(max6[1]) == std::vector<Elem>{0, 3});

    const auto max4 = maximal_left_ideals(FiniteRing::realize("Z4"));
    REQUIRE(max4.size() == 1);
    CHECK(members(max4[0]) == std::vector<Elem>{0, 2});

    const auto m = FiniteRing::realize("M2(Z2)");
    const auto maxm = maximal_left_ideals(m);
    REQUIRE(maxm.size() == 3);
    for (const auto& i : maxm) {
        CHECK(i.size() == 4);
        CHECK(is_left_ideal(m, i.elements));
        CHECK_FALSE(is_two_sided_ideal(m, i.elements));
    }
}

TEST_CASE("left ideal enumeration respects the cap") {
    CHECK(left_ideals(FiniteRing::realize("Z12")).size() == 6);  // divisors of 12
    CHECK_THROWS_AS(left_ideals(FiniteRing::realize("Z2 x Z2 x Z2 x Z2 x Z2"), 8), CapExceeded);
}

TEST_CASE("Jacobson radical") {
    CHECK(members(jacobson_radical(FiniteRing::realize("Z4"))) == std::vector<Elem>{0, 2});
    CHECK(members(jacobson_radical(FiniteRing::realize("Z6"))) == std::vector<Elem>{0});
    const auto dual = FiniteRing::realize("Z2[x]/(x^2)");
    const auto j = jacobson_radical(dual);
    CHECK(members(j) == std::vector<Elem>{0, 2});
    CHECK(dual.label(2) == "x");
    CHECK(jacobson_radical(FiniteRing::realize("M2(GF(2))")).is_zero());
    CHECK(members(jacobson_radical(FiniteRing::realize("Z8"))) == std::vector<Elem>{0, 2, 4, 6});
}

TEST_CASE("radical equals intersection of maximal left ideals over the catalog") {
    for (const auto& entry : catalog_up_to(256)) {
        CAPTURE(entry.spec);
        const auto r = FiniteRing::realize(entry.spec);
        const auto maximal = maximal_left_ideals(r);
        CHECK(jacobson_radical(r) == radical_by_intersection(r, maximal));
    }
}

TEST_CASE("nilpotency") {
    CHECK(radical_nilpotency_index(FiniteRing::realize("Z4")) == 2);
    CHECK(radical_nilpotency_index(FiniteRing::realize("Z8")) == 3);
    CHECK(radical_nilpotency_index(FiniteRing::realize("GF(9)")) == 1);
    CHECK(radical_nilpotency_index(FiniteRing::realize("Z2[x]/(x^2)")) == 2);
    CHECK(radical_nilpotency_index(FiniteRing::realize("Z2[x]/(x^3)")) == 3);
    const auto z8 = FiniteRing::realize("Z8");
    CHECK(nilpotency_degree(z8, 2) == std::optional<std::size_t>{3});
    CHECK(nilpotency_degree(z8, 4) == std::optional<std::size_t>{2});
    CHECK(nilpotency_degree(z8, 0) == std::optional<std::size_t>{1});
    CHECK_FALSE(nilpotency_degree(z8, 3).has_value());
}

TEST_CASE("quotients") {
    const auto z4 = FiniteRing::realize("Z4");
    const auto q = quotient_by_ideal(z4, jacobson_radical(z4));
    CHECK(q.ring.order() == 2);
    CHECK(q.projection == std::vector<Elem>{0, 1, 0, 1});
    CHECK(q.representative == std::vector<Elem>{0, 1});
    CHECK(q.ring.add(1, 1) == 0);
    CHECK(q.ring.mul(1, 1) == 1);

    const auto z6 = FiniteRing::realize("Z6");
    const auto id = quotient_by_ideal(z6, jacobson_radical(z6));
    CHECK(id.ring.order() == 6);
    for (Elem x = 0; x < 6; ++x) CHECK(id.projection[x] == x);

    const auto dual = FiniteRing::realize("Z2[x]/(x^2)");
    const auto qd = quotient_by_ideal(dual, jacobson_radical(dual));
    CHECK(qd.ring.order() == 2);
    CHECK(qd.ring.add(qd.ring.one(), qd.ring.one()) == 0);
}

TEST_CASE("quotient projection is a surjective ring homomorphism") {
    for (const char* text : {"Z8", "Z12", "Z2 x Z4", "Z4[x]/(x^2+2)", "M2(Z4)"}) {
        CAPTURE(text);
        const auto r = FiniteRing::realize(text);
        const auto q = quotient_by_ideal(r, jacobson_radical(r));
        const auto& p = q.projection;
        CHECK(p[r.one()] == q.ring.one());
        for (Elem x = 0; x < r.order(); x += 7) {
            for (Elem y = 0; y < r.order(); y += 3) {
                CHECK(p[r.add(x, y)] == q.ring.add(p[x], p[y]));
                CHECK(p[r.mul(x, y)] == q.ring.mul(p[x], p[y]));
            }
        }
        for (Elem c = 0; c < q.ring.order(); ++c) CHECK(p[q.representative[c]] == c);
    }
}

TEST_CASE("structure reports") {
    const auto z4 = structure_report(FiniteRing::realize("Z4"));
    CHECK(z4.is_local == std::optional<bool>{true});
    CHECK(z4.residue_field_order == std::optional<std::size_t>{2});
    CHECK_FALSE(z4.two_is_unit);
    CHECK(z4.unit_count == 2);

    const auto gf5 = structure_report(FiniteRing::realize("GF(5)"));
    CHECK(gf5.is_field);
    CHECK(gf5.is_division);
    CHECK(gf5.is_local == std::optional<bool>{true});
    CHECK(gf5.radical.is_zero());
    CHECK(gf5.two_is_unit);
    REQUIRE(gf5.maximal_left_ideals);
    CHECK(gf5.maximal_left_ideals->size() == 1);
    CHECK(gf5.maximal_left_ideals->front().is_zero());

    const auto z15 = structure_report(FiniteRing::realize("Z15"));
    CHECK(z15.is_local == std::optional<bool>{false});
    CHECK(z15.maximal_left_ideals->size() == 2);
    CHECK(z15.radical.is_zero());
    CHECK(z15.two_is_unit);

    const auto m = structure_report(FiniteRing::realize("M2(GF(2))"));
    CHECK(m.unit_count == 6);
    CHECK(m.radical.is_zero());
    CHECK(m.maximal_left_ideals->size() == 3);
    CHECK_FALSE(m.is_division);
    CHECK_FALSE(m.is_commutative);
}

TEST_CASE("local rings satisfy the unit dichotomy") {
    for (const char* text : {"Z4", "Z9", "Z27", "Z2[x]/(x^3)", "Z4[x]/(x^2+x+1)", "GF(8)"}) {
        const auto r = FiniteRing::realize(text);
        REQUIRE(*structure_report(r).is_local);
        for (Elem x = 0; x < r.order(); ++x) CHECK((r.is_unit(x) || r.is_unit(r.sub(r.one(), x))));
    }
}
