#include <doctest.h>

#include "unitgraph/bitset.hpp"
#include "unitgraph/unit_graph.hpp"

using namespace unitgraph;

TEST_CASE("bitset basics") {
    BitSet b(130);
    CHECK(b.none());
    b.set(3);
    b.set(64);
    b.set(129);
    CHECK(b.count() == 3);
    CHECK(b.first() == 3);
    CHECK(b.next(4) == 64);
    CHECK(b.next(130) == BitSet::npos);
    CHECK(b.to_vector() == std::vector<std::uint32_t>{3, 64, 129});
    const auto inv = ~b;
    CHECK(inv.count() == 127);
    CHECK_FALSE(inv.intersects(b));
    BitSet all(130, true);
    CHECK(b.is_subset_of(all));
    all.subtract(b);
    CHECK(all == inv);
}

TEST_CASE("bitset lex order") {
    const std::vector<std::uint32_t> a{0, 2};
    const std::vector<std::uint32_t> b{0, 3};
    const std::vector<std::uint32_t> c{0};
    CHECK(lex_compare(BitSet::from_indices(8, a), BitSet::from_indices(8, b)) < 0);
    CHECK(lex_compare(BitSet::from_indices(8, c), BitSet::from_indices(8, a)) < 0);
    CHECK(lex_compare(BitSet::from_indices(8, a), BitSet::from_indices(8, a)) == 0);
}

TEST_CASE("small unit graphs") {
    const auto g2 = build_unit_graph(FiniteRing::realize("Z2"));
    CHECK(g2.edge_count() == 1);
    CHECK(g2.adjacent(0, 1));
    CHECK(g2.degree(1) == 1);

    const auto g3 = build_unit_graph(FiniteRing::realize("Z3"));
    CHECK(g3.edge_count() == 2);
    CHECK(g3.adjacent(0, 1));
    CHECK(g3.adjacent(0, 2));
    CHECK_FALSE(g3.adjacent(1, 2));

    const auto g4 = build_unit_graph(FiniteRing::realize("Z4"));
    CHECK(g4.edge_count() == 4);
    CHECK(g4.degree(0) == 2);
    CHECK_FALSE(g4.adjacent(0, 2));
    CHECK_FALSE(g4.adjacent(1, 3));

    const auto g5 = build_unit_graph(FiniteRing::realize("Z5"));
    CHECK(g5.degree(3) == 3);
}

TEST_CASE("no loops even when 2x is a unit") {
    const auto g = build_unit_graph(FiniteRing::realize("Z5"));
    for (Vertex v = 0; v < 5; ++v) CHECK_FALSE(g.adjacent(v, v));
    UnitGraph h(3);
    CHECK_THROWS(h.add_edge(1, 1));
}

TEST_CASE("adjacency matches the definition") {
    for (const char* text : {"Z12", "M2(Z2)", "Z3 x GF(4)", "Z4[x]/(x^2+2)"}) {
        const auto r = FiniteRing::realize(text);
        const auto g = build_unit_graph(r);
        std::size_t edges = 0;
        for (Elem a = 0; a < r.order(); ++a) {
            for (Elem b = a + 1; b < r.order(); ++b) {
                const bool e = r.is_unit(r.add(a, b));
                edges += e ? 1 : 0;
                CHECK(g.adjacent(a, b) == e);
                CHECK(g.adjacent(b, a) == e);
            }
        }
        CHECK(g.edge_count() == edges);
    }
}

TEST_CASE("complement") {
    UnitGraph k2(2);
    k2.add_edge(0, 1);
    CHECK(complement(k2).edge_count() == 0);
    const auto c3 = complement(build_unit_graph(FiniteRing::realize("Z3")));
    CHECK(c3.edge_count() == 1);
    CHECK(c3.adjacent(1, 2));
}

TEST_CASE("export formats") {
    CHECK(export_edgelist(build_unit_graph(FiniteRing::realize("Z2"))) == "0 1");
    CHECK(export_edgelist(build_unit_graph(FiniteRing::realize("Z3"))) == "0 1\n0 2");
    CHECK(export_edgelist(build_unit_graph(FiniteRing::realize("Z4"))) == "0 1\n0 3\n1 2\n2 3");
    const auto dot = export_dot(build_unit_graph(FiniteRing::realize("Z2")), "Z2");
    CHECK(dot ==
          "graph \"Z2\" {\n"
          "  0 [label=\"0\"];\n"
          "  1 [label=\"1\"];\n"
          "  0 -- 1;\n"
          "}\n");
    const auto labelled = export_dot(build_unit_graph(FiniteRing::realize("GF(4)")));
    CHECK(labelled.find("[label=\"x+1\"]") != std::string::npos);
}

TEST_CASE("random graphs are reproducible") {
    std::mt19937_64 a(7);
    std::mt19937_64 b(7);
    CHECK(random_graph(16, 0.5, a) == random_graph(16, 0.5, b));
}
