#pragma once

// Structural ring implementations behind FiniteRing. Private to the library.

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unitgraph/finite_ring.hpp"

namespace unitgraph::detail {

class RingImpl {
public:
    virtual ~RingImpl() = default;

    virtual std::size_t order() const = 0;
    virtual Elem add(Elem x, Elem y) const = 0;
    virtual Elem neg(Elem x) const = 0;
    virtual Elem mul(Elem x, Elem y) const = 0;
    virtual Elem one() const = 0;
    virtual bool commutative() const = 0;
    virtual std::string label(Elem x) const = 0;
    virtual RingKind kind() const = 0;

    virtual std::vector<Elem> components(Elem) const { return {}; }
    virtual Elem compose(std::span<const Elem>) const;
    virtual std::vector<FiniteRing> parts() const { return {}; }
    virtual unsigned dimension() const { return 0; }
    virtual std::optional<Elem> determinant(Elem) const { return std::nullopt; }

    /// Unit set from structure, when a shortcut exists.
    virtual std::optional<BitSet> structural_units() const { return std::nullopt; }
};

std::unique_ptr<RingImpl> make_modular(std::uint64_t n);
std::unique_ptr<RingImpl> make_polynomial(std::uint64_t n, std::vector<std::uint64_t> modulus,
                                          bool is_field);
std::unique_ptr<RingImpl> make_matrix(FiniteRing base, unsigned size);
std::unique_ptr<RingImpl> make_product(std::vector<FiniteRing> factors);
std::unique_ptr<RingImpl> make_table(std::vector<Elem> add_table, std::vector<Elem> mul_table,
                                     Elem one, std::vector<std::string> labels);

struct RingState {
    std::unique_ptr<RingImpl> impl;
    std::size_t order = 0;
    Elem one = 0;
    // Memoized when order <= table_cap; empty otherwise.
    std::vector<Elem> add_table;
    std::vector<Elem> mul_table;
    std::vector<Elem> neg_table;
    BitSet units;
    bool commutative = false;
    std::string name;
    std::optional<RingSpec> spec;
    std::vector<FiniteRing> parts;
};

}  // namespace unitgraph::detail
