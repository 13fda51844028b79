#include "polynomial.hpp"

#include "unitgraph/finite_ring.hpp"

namespace unitgraph {
namespace detail {

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t n) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint64_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i) {
            a[shift + i] = (a[shift + i] + n - (lead * m[i]) % n) % n;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t n) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] = (out[i + j] + a[i] * b[j]) % n;
        }
    }
    return out;
}

Poly monic_from_lex_index(std::uint64_t index, unsigned degree, std::uint64_t p) {
    Poly out(degree + 1, 0);
    out[degree] = 1;
    for (unsigned i = degree; i-- > 0;) {
        out[i] = index % p;
        index /= p;
    }
    return out;
}

}  // namespace detail

bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p) {
    detail::Poly f = poly;
    detail::trim(f);
    if (f.size() < 2 || f.back() != 1) return false;
    const unsigned degree = static_cast<unsigned>(f.size() - 1);
    for (unsigned d = 1; 2 * d <= degree; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            const auto g = detail::monic_from_lex_index(idx, d, p);
            if (detail::poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned degree) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        auto f = detail::monic_from_lex_index(idx, degree, p);
        if (is_irreducible(f, p)) return f;
    }
    throw RealizeError("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace unitgraph
