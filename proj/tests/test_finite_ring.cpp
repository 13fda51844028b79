#include <doctest.h>

#include <numeric>

#include "unitgraph/errors.hpp"
#include "unitgraph/finite_ring.hpp"

using namespace unitgraph;

namespace {

// Independent matrix arithmetic over Z_m, entries row-major.
using Mat = std::vector<std::uint64_t>;

Mat mat_mul(const Mat& a, const Mat& b, unsigned n, std::uint64_t m) {
    Mat c(n * n, 0);
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j)
            for (unsigned k = 0; k < n; ++k) c[i * n + j] = (c[i * n + j] + a[i * n + k] * b[k * n + j]) % m;
    return c;
}

Mat identity(unsigned n) {
    Mat id(n * n, 0);
    for (unsigned i = 0; i < n; ++i) id[i * n + i] = 1;
    return id;
}

std::vector<Elem> as_elems(const Mat& m) { return {m.begin(), m.end()}; }

}  // namespace

TEST_CASE("Zn arithmetic") {
    const auto z4 = FiniteRing::realize("Z4");
    CHECK(z4.order() == 4);
    CHECK(z4.add(3, 3) == 2);
    CHECK(z4.mul(3, 3) == 1);
    CHECK(z4.neg(1) == 3);
    CHECK(z4.sub(1, 3) == 2);
    CHECK(z4.from_int(-1) == 3);
    CHECK(z4.pow(3, 5) == 3);
    CHECK_FALSE(z4.is_unit(2));
    CHECK(z4.units().to_vector() == std::vector<Elem>{1, 3});
    CHECK_FALSE(z4.two_is_unit());

    const auto z15 = FiniteRing::realize("Z15");
    CHECK(z15.is_unit(7));
    CHECK(z15.mul(7, 13) == 1);
    CHECK(z15.unit_count() == 8);
    CHECK(z15.two_is_unit());
}

TEST_CASE("units agree with gcd over Zn") {
    for (std::uint64_t n = 2; n <= 64; ++n) {
        const auto r = FiniteRing::realize(RingSpec::zn(n));
        for (Elem x = 0; x < n; ++x) {
            CAPTURE(n);
            CAPTURE(x);
            CHECK(r.is_unit(x) == (std::gcd<std::uint64_t>(x, n) == 1));
        }
    }
}

TEST_CASE("Galois fields") {
    const auto gf4 = FiniteRing::realize("GF(4)");
    CHECK(gf4.order() == 4);
    CHECK(gf4.unit_count() == 3);
    CHECK(gf4.is_commutative());
    CHECK(gf4.label(2) == "x");
    for (const char* text : {"GF(8)", "GF(9)", "GF(16)", "GF(13)"}) {
        const auto f = FiniteRing::realize(text);
        CHECK(f.unit_count() + 1 == f.order());
        // every nonzero element has an inverse
        for (Elem x = 1; x < f.order(); ++x) CHECK(f.pow(x, f.order() - 1) == f.one());
    }
}

TEST_CASE("reducible GF modulus is rejected") {
    CHECK_THROWS_AS(FiniteRing::realize(RingSpec::galois_field(2, 2, std::vector<std::uint64_t>{1, 0, 1})),
                    RealizeError);
}

TEST_CASE("order cap") {
    RealizeOptions opts;
    opts.order_cap = 100;
    CHECK_THROWS_AS(FiniteRing::realize("M2(Z4)", opts), RealizeError);
    CHECK_NOTHROW(FiniteRing::realize("Z64", opts));
}

TEST_CASE("matrix ring over Z2") {
    const auto m = FiniteRing::realize("M2(Z2)");
    CHECK(m.order() == 16);
    CHECK(m.unit_count() == 6);
    CHECK_FALSE(m.is_commutative());
    const Elem a = m.compose(std::vector<Elem>{1, 1, 0, 1});
    CHECK(a == 13);  // entry (0,0) is the most significant digit
    CHECK(m.label(a) == "[[1,1],[0,1]]");
    CHECK(m.mul(a, a) == m.one());
    CHECK(m.is_unit(a));
    CHECK(m.determinant(a) == std::optional<Elem>{1});
}

TEST_CASE("matrix multiplication matches an independent implementation") {
    for (std::uint64_t mod : {2ULL, 3ULL, 4ULL}) {
        const auto m = FiniteRing::matrix_ring(FiniteRing::realize(RingSpec::zn(mod)), 2);
        for (Elem x = 0; x < m.order(); x += 3) {
            for (Elem y = 0; y < m.order(); y += 5) {
                const auto cx = m.components(x);
                const auto cy = m.components(y);
                const Mat prod = mat_mul(Mat(cx.begin(), cx.end()), Mat(cy.begin(), cy.end()), 2, mod);
                CHECK(m.mul(x, y) == m.compose(as_elems(prod)));
            }
        }
    }
}

TEST_CASE("matrix units by brute-force inverse search") {
    // |GL2(F3)| = 48, |GL3(F2)| = 168, |GL2(Z4)| = 96
    CHECK(FiniteRing::realize("M2(GF(3))").unit_count() == 48);
    CHECK(FiniteRing::realize("M3(GF(2))").unit_count() == 168);
    CHECK(FiniteRing::realize("M2(Z4)").unit_count() == 96);
    const auto m = FiniteRing::realize("M2(GF(3))");
    CHECK(m.units() == units_by_inverse_search(m));
    const Mat id = identity(2);
    CHECK(m.compose(as_elems(id)) == m.one());
}

TEST_CASE("products are componentwise") {
    const auto r = FiniteRing::realize("Z2 x Z3");
    CHECK(r.order() == 6);
    CHECK(r.unit_count() == 2);
    const Elem x = r.compose(std::vector<Elem>{1, 2});
    CHECK(r.label(x) == "(1,2)");
    CHECK(r.components(r.mul(x, x)) == std::vector<Elem>{1, 1});
    CHECK(r.components(r.add(x, x)) == std::vector<Elem>{0, 1});
    CHECK(r.one() == r.compose(std::vector<Elem>{1, 1}));
}

TEST_CASE("polynomial quotients") {
    const auto r = FiniteRing::realize("Z2[x]/(x^2)");
    CHECK(r.order() == 4);
    CHECK(r.label(2) == "x");
    CHECK(r.mul(2, 2) == 0);
    CHECK(r.units().to_vector() == std::vector<Elem>{1, 3});
    const auto q = FiniteRing::realize("Z4[x]/(x^2+x+1)");
    CHECK(q.order() == 16);
    CHECK(q.unit_count() == 12);  // Galois ring GR(4,2)
}

TEST_CASE("ring axioms hold on every construction") {
    for (const char* text : {"Z6", "GF(9)", "M2(Z2)", "Z2 x GF(4)", "Z4[x]/(x^2+2)", "Z3[x]/(x^2)", "M2(GF(3))"}) {
        CAPTURE(text);
        const auto report = check_ring_axioms(FiniteRing::realize(text));
        CHECK(report.ok);
        CHECK(report.failure.empty());
    }
    AxiomCheckOptions sampled;
    sampled.samples = 2000;
    const auto big = check_ring_axioms(FiniteRing::realize("M3(GF(2))"), sampled);
    CHECK(big.ok);
    CHECK_FALSE(big.exhaustive);
    CHECK(big.triples_checked == 2000);
}

TEST_CASE("unit set is closed under products and inverses") {
    for (const char* text : {"Z12", "M2(Z2)", "Z3 x GF(4)", "Z2[x]/(x^3)"}) {
        const auto r = FiniteRing::realize(text);
        r.units().for_each([&](Elem u) {
            r.units().for_each([&](Elem v) { CHECK(r.is_unit(r.mul(u, v))); });
        });
    }
}

TEST_CASE("bounds checks") {
    const auto r = FiniteRing::realize("Z4");
    CHECK_THROWS_AS(r.add(4, 0), std::out_of_range);
    CHECK_THROWS_AS(r.label(9), std::out_of_range);
}

TEST_CASE("format helpers") {
    const auto r = FiniteRing::realize("Z4");
    CHECK(format_set(r, r.units()) == "{1,3}");
    const std::vector<Elem> elems{2, 0};
    CHECK(format_elements(r, elems) == "{2,0}");
}
