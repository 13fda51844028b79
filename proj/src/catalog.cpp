#include "unitgraph/catalog.hpp"

#include "unitgraph/errors.hpp"
#include "unitgraph/ring_spec.hpp"

namespace unitgraph {

const std::vector<CatalogEntry>& default_catalog() {
    static const std::vector<CatalogEntry> entries = {
        {"Z2", "smallest ring; G = K2, bipartite through its Z2 summand"},
        {"Z3", "field of order 3; the one bipartite ring without a Z2 summand"},
        {"Z4", "local with |R/m| = 2; G = K2,2; 2 not a unit"},
        {"Z5", "field; complete 3-partite with parts {0},{1,4},{2,3}"},
        {"Z6", "Z2 x Z3 by CRT; not local; bipartite"},
        {"Z7", "field of odd order; omega = 4"},
        {"Z8", "local with J^3 = 0; G = K4,4"},
        {"Z9", "local with |R/m| = 3: not complete multipartite; J != 0 and 2 a unit"},
        {"Z10", "Z2 x Z5; bipartite"},
        {"Z11", "field of odd order"},
        {"Z12", "Z4 x Z3; 2 not a unit with J != 0"},
        {"Z13", "field of odd order; omega = 7"},
        {"Z14", "Z2 x Z7; bipartite"},
        {"Z15", "exercises T2.5 (two maximal ideals, 2 a unit)"},
        {"Z16", "local with nilpotency index 4"},
        {"Z25", "local, 2 a unit; 1+J is a clique of size 5"},
        {"Z27", "local, 2 a unit; nilpotency index 3"},
        {"Z32", "local; G = K16,16"},
        {"Z49", "local with |R/m| = 7; not complete multipartite"},
        {"Z64", "local; G = K32,32; nilpotency index 6"},
        {"GF(2)", "field of characteristic 2; G complete"},
        {"GF(3)", "field; G(GF(3)) is a path, bipartite"},
        {"GF(4)", "field of characteristic 2; G = K4"},
        {"GF(5)", "field; r = 3"},
        {"GF(7)", "field; omega = 4 >= |Max| + 1 = 2"},
        {"GF(8)", "field of characteristic 2; G = K8"},
        {"GF(9)", "non-prime field of odd order; r = 5"},
        {"GF(11)", "field; r = 6"},
        {"GF(13)", "field; r = 7"},
        {"GF(16)", "field of characteristic 2; G = K16"},
        {"Z2[x]/(x^2)", "local with J = {0,x}; G = K2,2"},
        {"Z4[x]/(x^2+2)", "local chain ring of order 16 with |R/m| = 2"},
        {"Z2[x]/(x^3)", "local with nilpotency index 3"},
        {"Z3[x]/(x^2)", "local with |R/m| = 3, 2 a unit; not complete multipartite"},
        {"Z4[x]/(x^2+x+1)", "Galois ring of order 16: local with |R/m| = 4, complete 4-partite"},
        {"M2(GF(2))", "simple non-commutative ring; three maximal left ideals; explicit 2x2 triangle"},
        {"M2(GF(3))", "simple ring with 2 a unit; explicit 2x2 triangle over GF(3)"},
        {"M3(GF(2))", "simple ring of order 512; explicit 3x3 triangle"},
        {"M2(Z4)", "non-commutative, J != 0, 2 not a unit; R/J = M2(GF(2))"},
        {"Z2 x Z2", "semisimple with Z2 summands; bipartite"},
        {"Z2 x Z3", "bipartite through its Z2 summand"},
        {"Z2 x Z4", "not local, J != 0, 2 not a unit"},
        {"Z3 x Z3", "semisimple without Z2 summand; product-clique triangle"},
        {"Z3 x Z5", "T2.5 witness {(0,1),(1,0),(1,1)}"},
        {"Z3 x Z5 x Z7", "three maximal ideals; product clique of size 4"},
        {"Z2 x GF(4)", "bipartite through its Z2 summand"},
        {"Z3 x GF(4)", "Z3 summand next to a field of order 4; not bipartite"},
        {"Z3 x M2(GF(2))", "not bipartite; triangle (0,A)-(1,B)-(1,C)"},
        {"Z2 x M2(GF(3))", "bipartite through its Z2 summand despite the matrix factor"},
    };
    return entries;
}

std::vector<CatalogEntry> catalog_up_to(std::uint64_t max_order) {
    std::vector<CatalogEntry> out;
    for (const auto& e : default_catalog()) {
        if (spec_order(parse_ring_spec(e.spec)) <= max_order) out.push_back(e);
    }
    return out;
}

std::optional<CatalogEntry> find_catalog_entry(std::string_view spec_text) {
    const std::string canonical = to_string(parse_ring_spec(spec_text));
    for (const auto& e : default_catalog()) {
        if (e.spec == canonical) return e;
    }
    return std::nullopt;
}

}  // namespace unitgraph
