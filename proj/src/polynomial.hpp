#pragma once

// Dense polynomials over Z_n, coefficients constant term first.

#include <cstdint>
#include <vector>

namespace unitgraph::detail {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);

/// a mod m over Z_n for monic m.
Poly poly_mod(Poly a, const Poly& m, std::uint64_t n);

/// Product over Z_n, untrimmed length a.size() + b.size() - 1.
Poly poly_mul(const Poly& a, const Poly& b, std::uint64_t n);

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-p digits of `index`, c0 most significant. Iterating index upward
/// walks monic polynomials in lexicographic (c0, c1, ...) order.
Poly monic_from_lex_index(std::uint64_t index, unsigned degree, std::uint64_t p);

}  // namespace unitgraph::detail
