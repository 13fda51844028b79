#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "unitgraph/bitset.hpp"
#include "unitgraph/finite_ring.hpp"

namespace unitgraph {

enum class Sidedness { left, two_sided };

/// A subset of a ring that is (at least) a left ideal.
struct IdealSet {
    BitSet elements;
    Sidedness side = Sidedness::left;

    std::size_t size() const { return elements.count(); }
    bool contains(Elem x) const { return elements.test(x); }
    bool is_zero() const { return size() == 1; }

    friend bool operator==(const IdealSet&, const IdealSet&) = default;
};

/// Rx = { a*x : a in R }.
IdealSet principal_left_ideal(const FiniteRing& ring, Elem x);

/// Additive subgroup generated by `generators`.
BitSet additive_closure(const FiniteRing& ring, const BitSet& generators);

bool is_left_ideal(const FiniteRing& ring, const BitSet& set);
bool is_two_sided_ideal(const FiniteRing& ring, const BitSet& set);

inline constexpr std::size_t kDefaultIdealCap = 1024;

/// Every left ideal, obtained by closing the principal left ideals under
/// pairwise sums. Sorted by element-list lexicographic order. Throws
/// CapExceeded when order > cap.
std::vector<IdealSet> left_ideals(const FiniteRing& ring, std::size_t cap = kDefaultIdealCap);

/// Maximal proper left ideals in element-list lexicographic order.
std::vector<IdealSet> maximal_left_ideals(const FiniteRing& ring,
                                          std::size_t cap = kDefaultIdealCap);

/// J(R) by quasi-regularity: x in J iff 1 - a*x is a unit for every a.
IdealSet jacobson_radical(const FiniteRing& ring);

/// J(R) as the intersection of the given maximal left ideals.
IdealSet radical_by_intersection(const FiniteRing& ring, std::span<const IdealSet> maximal);

/// Smallest i >= 1 with J^i = {0}.
std::size_t radical_nilpotency_index(const FiniteRing& ring);
std::size_t radical_nilpotency_index(const FiniteRing& ring, const IdealSet& radical);

/// Smallest i >= 1 with x^i = 0, if x is nilpotent.
std::optional<std::size_t> nilpotency_degree(const FiniteRing& ring, Elem x);

struct Quotient {
    FiniteRing ring;
    /// element of R -> coset index in the quotient
    std::vector<Elem> projection;
    /// coset index -> least-index representative in R
    std::vector<Elem> representative;
};

/// R/I for a proper two-sided ideal. Cosets are numbered by ascending least
/// representative, so the coset of 0 is index 0. Throws std::invalid_argument
/// if I is not a proper two-sided ideal.
Quotient quotient_by_ideal(const FiniteRing& ring, const IdealSet& ideal);

struct StructureReport {
    std::size_t order = 0;
    std::size_t unit_count = 0;
    IdealSet radical;
    std::size_t radical_nilpotency_index = 1;
    /// Absent when ideal enumeration exceeded its cap.
    std::optional<std::vector<IdealSet>> maximal_left_ideals;
    std::optional<bool> is_local;
    bool is_division = false;
    bool is_field = false;
    bool is_commutative = false;
    std::optional<std::size_t> residue_field_order;
    bool two_is_unit = false;
};

/// Throws std::logic_error if the quasi-regular radical disagrees with the
/// intersection of maximal left ideals.
StructureReport structure_report(const FiniteRing& ring, std::size_t ideal_cap = kDefaultIdealCap);

}  // namespace unitgraph
