#include <doctest.h>

#include <random>

#include "unitgraph/catalog.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/invariants.hpp"

using namespace unitgraph;

namespace {

UnitGraph graph_of(const char* text) { return build_unit_graph(FiniteRing::realize(text)); }

// Independent brute-force chromatic number for tiny graphs.
std::size_t chromatic_brute(const UnitGraph& g) {
    const std::size_t n = g.vertex_count();
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::uint32_t> colour(n, 0);
        while (true) {
            if (is_proper_coloring(g, colour)) return k;
            std::size_t i = 0;
            while (i < n && ++colour[i] == k) colour[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

}  // namespace

TEST_CASE("clique numbers") {
    CHECK(clique_number(graph_of("Z2")).size == 2);
    CHECK(clique_number(graph_of("Z5")).size == 3);
    CHECK(clique_number(graph_of("GF(4)")).size == 4);
    CHECK(clique_number(graph_of("Z4")).size == 2);
    CHECK(clique_number(UnitGraph(5)).size == 1);
    const auto w = clique_number(graph_of("Z15"));
    CHECK(w.exact);
    CHECK(w.size == clique_number_oracle(graph_of("Z15")));
    CHECK(is_clique(graph_of("Z15"), w.witness));
}

TEST_CASE("oracle") {
    CHECK(clique_number_oracle(graph_of("Z4")) == 2);
    CHECK(clique_number_oracle(UnitGraph(6)) == 1);
    CHECK_THROWS_AS(clique_number_oracle(UnitGraph(21)), CapExceeded);
}

TEST_CASE("independence numbers") {
    const auto z4 = independence_number(graph_of("Z4"));
    CHECK(z4.size == 2);
    CHECK(is_coclique(graph_of("Z4"), z4.witness));
    UnitGraph k(4);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = u + 1; v < 4; ++v) k.add_edge(u, v);
    CHECK(independence_number(k).size == 1);
    CHECK(independence_number(graph_of("Z2[x]/(x^2)")).size == 2);
}

TEST_CASE("chromatic numbers") {
    for (const char* text : {"Z4", "GF(4)", "Z2", "Z5", "Z9", "Z8", "Z2 x Z3"}) {
        CAPTURE(text);
        const auto g = graph_of(text);
        const auto c = chromatic_number(g);
        CHECK(c.exact);
        CHECK(c.lower == c.upper);
        CHECK(is_proper_coloring(g, c.coloring));
        CHECK(c.upper == chromatic_brute(g));
    }
    CHECK(chromatic_number(graph_of("Z4")).upper == 2);
    CHECK(chromatic_number(graph_of("GF(4)")).upper == 4);
    CHECK(chromatic_number(graph_of("Z8")).upper == 2);
}

TEST_CASE("chromatic bounds above the cap") {
    ChromaticOptions opts;
    opts.exact_cap = 4;
    const auto g = graph_of("Z9");
    const auto c = chromatic_number(g, opts);
    CHECK(c.lower <= c.upper);
    CHECK(is_proper_coloring(g, c.coloring));
}

TEST_CASE("bipartiteness") {
    const auto z3 = is_bipartite(graph_of("Z3"));
    CHECK(z3.bipartite);
    CHECK(z3.parts()[0] == std::vector<Vertex>{0});
    CHECK(z3.parts()[1] == std::vector<Vertex>{1, 2});
    const auto m = graph_of("M2(Z2)");
    const auto bm = is_bipartite(m);
    CHECK_FALSE(bm.bipartite);
    CHECK(is_odd_cycle(m, bm.odd_cycle));
    CHECK(is_bipartite(UnitGraph(4)).bipartite);
}

TEST_CASE("complete multipartite recognition") {
    const auto z4 = complete_multipartite(graph_of("Z4"));
    CHECK(z4.complete);
    CHECK(z4.parts == std::vector<std::vector<Vertex>>{{0, 2}, {1, 3}});
    const auto z5 = complete_multipartite(graph_of("Z5"));
    CHECK(z5.complete);
    CHECK(z5.parts == std::vector<std::vector<Vertex>>{{0}, {1, 4}, {2, 3}});
    CHECK(z5.r() == 3);

    const auto g9 = graph_of("Z9");
    const auto z9 = complete_multipartite(g9);
    CHECK_FALSE(z9.complete);
    REQUIRE(z9.violation);
    const auto [x, y, z] = *z9.violation;
    CHECK_FALSE(g9.adjacent(x, y));
    CHECK_FALSE(g9.adjacent(y, z));
    CHECK(g9.adjacent(x, z));
    CHECK(std::vector<Vertex>{x, y, z} == std::vector<Vertex>{2, 1, 5});

    CHECK(complete_multipartite(graph_of("Z8")).r() == 2);
    CHECK(complete_multipartite(graph_of("GF(4)")).r() == 4);
}

TEST_CASE("solver agrees with the oracle on random graphs") {
    std::mt19937_64 rng(20240607);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = 1 + rng() % 16;
        const auto g = random_graph(n, 0.5, rng);
        const auto w = clique_number(g);
        CHECK(w.size == clique_number_oracle(g));
        CHECK(is_clique(g, w.witness));
        const auto a = independence_number(g);
        CHECK(a.size == clique_number_oracle(complement(g)));
        CHECK(is_coclique(g, a.witness));
        if (n <= 9) CHECK(chromatic_number(g).upper == chromatic_brute(g));
    }
}

TEST_CASE("node budget yields inexact results") {
    std::mt19937_64 rng(11);
    const auto g = random_graph(90, 0.8, rng);
    const auto w = clique_number(g, 3);
    CHECK_FALSE(w.exact);
    CHECK(is_clique(g, w.witness));
    CHECK(w.size == w.witness.size());
}

TEST_CASE("field clique formulas") {
    for (std::size_t q : {3, 5, 7, 9, 11, 13}) {
        const auto g = build_unit_graph(FiniteRing::realize(RingSpec::galois_field_of_order(q)));
        CHECK(clique_number(g).size == (q + 1) / 2);
    }
    for (std::size_t q : {2, 4, 8, 16}) {
        const auto g = build_unit_graph(FiniteRing::realize(RingSpec::galois_field_of_order(q)));
        CHECK(clique_number(g).size == q);
    }
}

TEST_CASE("compute_invariants") {
    const auto r = compute_invariants(graph_of("Z5"));
    CHECK(r.omega.size == 3);
    CHECK(r.alpha.size == 2);
    CHECK(r.chi.upper == 3);
    CHECK_FALSE(r.bipartite.bipartite);
    CHECK(r.multipartite.r() == 3);
    CHECK(r.exact());
}
