#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitgraph/bitset.hpp"
#include "unitgraph/errors.hpp"
#include "unitgraph/ring_spec.hpp"

namespace unitgraph {

/// A ring element: a dense index in [0, order). Index 0 is always zero.
///
/// Encodings are mixed radix. Zn uses the residue; GF and polynomial
/// quotients use coefficient digits base |base| with the constant term least
/// significant; matrix rings use row-major entry digits base |base| with
/// entry (0,0) most significant; products use factor digits with the
/// leftmost factor most significant.
using Elem = std::uint32_t;

struct RealizeOptions {
    std::size_t order_cap = 4096;
    /// Full addition/multiplication tables are memoized up to this order.
    std::size_t table_cap = 1024;
};

enum class RingKind { modular, polynomial, matrix, product, table };

namespace detail {
struct RingState;
}

/// A realized finite ring. Immutable after construction; copies share state
/// and may be read concurrently.
class FiniteRing {
public:
    /// Throws RealizeError when the order exceeds the cap or a supplied GF
    /// modulus is reducible.
    static FiniteRing realize(const RingSpec& spec, const RealizeOptions& options = {});
    static FiniteRing realize(std::string_view spec_text, const RealizeOptions& options = {});

    /// M_n(base), reusing an already realized base ring.
    static FiniteRing matrix_ring(const FiniteRing& base, unsigned size,
                                  const RealizeOptions& options = {});

    /// Ring given by explicit tables (row-major, order x order). Used for
    /// quotient rings; no ring axioms are checked here.
    static FiniteRing from_tables(std::string name, std::vector<Elem> add_table,
                                  std::vector<Elem> mul_table, Elem one,
                                  std::vector<std::string> labels);

    std::size_t order() const noexcept;
    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept;

    // All arithmetic throws std::out_of_range for indices >= order().
    Elem add(Elem x, Elem y) const;
    Elem neg(Elem x) const;
    Elem sub(Elem x, Elem y) const;
    Elem mul(Elem x, Elem y) const;
    /// k * 1, for any integer k.
    Elem from_int(std::int64_t k) const;
    Elem pow(Elem x, std::uint64_t e) const;

    bool is_unit(Elem x) const;
    const BitSet& units() const noexcept;
    std::size_t unit_count() const noexcept;
    /// is_unit(1 + 1)
    bool two_is_unit() const;
    bool is_commutative() const noexcept;

    std::string label(Elem x) const;
    /// Canonical spec text, or a description for table rings.
    const std::string& name() const noexcept;
    const std::optional<RingSpec>& spec() const noexcept;
    RingKind kind() const noexcept;

    /// Product factors, or the single base ring of a matrix ring; empty otherwise.
    std::span<const FiniteRing> parts() const noexcept;
    /// Matrix dimension (matrix rings) or polynomial degree bound (polynomial rings).
    unsigned dimension() const noexcept;
    /// Structural digits: product components, matrix entries (row-major) or
    /// polynomial coefficients (constant first). Empty for other kinds.
    std::vector<Elem> components(Elem x) const;
    Elem compose(std::span<const Elem> components) const;
    /// Determinant, for matrix rings over a commutative base.
    std::optional<Elem> determinant(Elem x) const;

    bool same_state(const FiniteRing& other) const noexcept { return state_ == other.state_; }

private:
    explicit FiniteRing(std::shared_ptr<const detail::RingState> state);
    void check(Elem x) const;

    std::shared_ptr<const detail::RingState> state_;
};

/// Unit set by exhaustive two-sided inverse search, independent of any
/// structural shortcut. O(order^2).
BitSet units_by_inverse_search(const FiniteRing& ring);

struct AxiomCheckOptions {
    std::size_t exhaustive_limit = 256;
    std::size_t samples = 100000;
    std::uint64_t seed = 0x5eed;
};

struct AxiomReport {
    bool ok = true;
    bool exhaustive = true;
    std::uint64_t triples_checked = 0;
    std::string failure;
};

/// Ring axioms (additive group, associativity, distributivity, identity):
/// exhaustive up to the limit, sampled triples beyond it.
AxiomReport check_ring_axioms(const FiniteRing& ring, const AxiomCheckOptions& options = {});

/// Monic irreducibility over Z_p by trial division with every monic
/// polynomial of degree <= deg/2.
bool is_irreducible(const std::vector<std::uint64_t>& poly, std::uint64_t p);

/// Smallest monic irreducible of the given degree, ordered lexicographically
/// by coefficients with the constant term compared first.
std::vector<std::uint64_t> smallest_irreducible(std::uint64_t p, unsigned degree);

std::string format_set(const FiniteRing& ring, const BitSet& set);
std::string format_elements(const FiniteRing& ring, std::span<const Elem> elements);

}  // namespace unitgraph
