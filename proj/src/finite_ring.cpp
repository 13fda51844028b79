#include "unitgraph/finite_ring.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "ring_impl.hpp"

namespace unitgraph {

namespace {

using detail::RingImpl;
using detail::RingState;

// Largest order for which structural unit sets are cross-checked against
// inverse search while realizing.
constexpr std::size_t kUnitCrossCheckOrder = 256;

BitSet search_units(const RingImpl& impl) {
    const std::size_t n = impl.order();
    const Elem one = impl.one();
    BitSet out(n);
    for (std::size_t x = 0; x < n; ++x) {
        if (out.test(x)) continue;
        for (std::size_t y = 0; y < n; ++y) {
            const auto ex = static_cast<Elem>(x);
            const auto ey = static_cast<Elem>(y);
            if (impl.mul(ex, ey) == one && impl.mul(ey, ex) == one) {
                out.set(x);
                out.set(y);
                break;
            }
        }
    }
    return out;
}

std::shared_ptr<const RingState> build_state(std::unique_ptr<RingImpl> impl, std::string name,
                                             std::optional<RingSpec> spec,
                                             const RealizeOptions& options) {
    auto state = std::make_shared<RingState>();
    const std::size_t n = impl->order();
    state->order = n;
    state->one = impl->one();
    state->commutative = impl->commutative();
    state->name = std::move(name);
    state->spec = std::move(spec);
    state->parts = impl->parts();

    state->neg_table.resize(n);
    for (std::size_t x = 0; x < n; ++x) state->neg_table[x] = impl->neg(static_cast<Elem>(x));

    if (n <= options.table_cap && impl->kind() != RingKind::table) {
        state->add_table.resize(n * n);
        state->mul_table.resize(n * n);
        for (std::size_t x = 0; x < n; ++x) {
            for (std::size_t y = 0; y < n; ++y) {
                state->add_table[x * n + y] = impl->add(static_cast<Elem>(x), static_cast<Elem>(y));
                state->mul_table[x * n + y] = impl->mul(static_cast<Elem>(x), static_cast<Elem>(y));
            }
        }
    }

    if (auto structural = impl->structural_units()) {
        if (n <= kUnitCrossCheckOrder && *structural != search_units(*impl)) {
            throw std::logic_error("structural unit test disagrees with inverse search for " +
                                   state->name);
        }
        state->units = std::move(*structural);
    } else {
        state->units = search_units(*impl);
    }
    state->impl = std::move(impl);
    return state;
}

void check_order(std::uint64_t order, const RealizeOptions& options, const std::string& name) {
    if (order > options.order_cap) {
        throw RealizeError("ring " + name + " has order " +
                           (order == UINT64_MAX ? std::string("beyond 2^64") : std::to_string(order)) +
                           ", exceeding the order cap " + std::to_string(options.order_cap));
    }
}

std::unique_ptr<RingImpl> build_impl(const RingSpec& spec, const RealizeOptions& options) {
    return std::visit(
        [&](const auto& node) -> std::unique_ptr<RingImpl> {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, ZnSpec>) {
                return detail::make_modular(node.n);
            } else if constexpr (std::is_same_v<T, GaloisFieldSpec>) {
                std::vector<std::uint64_t> modulus;
                if (node.modulus) {
                    modulus = *node.modulus;
                    if (!is_irreducible(modulus, node.p)) {
                        throw RealizeError("GF modulus " + polynomial_to_string(modulus) +
                                           " is reducible over Z" + std::to_string(node.p));
                    }
                } else {
                    modulus = smallest_irreducible(node.p, node.k);
                }
                return detail::make_polynomial(node.p, std::move(modulus), true);
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                return detail::make_polynomial(node.n, node.modulus, false);
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                return detail::make_matrix(FiniteRing::realize(*node.base, options), node.size);
            } else {
                std::vector<FiniteRing> factors;
                for (const auto& f : node.factors) factors.push_back(FiniteRing::realize(f, options));
                return detail::make_product(std::move(factors));
            }
        },
        spec.node);
}

}  // namespace

FiniteRing::FiniteRing(std::shared_ptr<const detail::RingState> state) : state_(std::move(state)) {}

FiniteRing FiniteRing::realize(const RingSpec& spec, const RealizeOptions& options) {
    std::string name = to_string(spec);
    check_order(spec_order(spec), options, name);
    auto impl = build_impl(spec, options);
    return FiniteRing(build_state(std::move(impl), std::move(name), spec, options));
}

FiniteRing FiniteRing::realize(std::string_view spec_text, const RealizeOptions& options) {
    return realize(parse_ring_spec(spec_text), options);
}

FiniteRing FiniteRing::matrix_ring(const FiniteRing& base, unsigned size,
                                   const RealizeOptions& options) {
    if (size < 1) throw RealizeError("matrix size must be at least 1");
    std::optional<RingSpec> spec;
    std::string name;
    if (base.spec()) {
        spec = RingSpec::matrix(*base.spec(), size);
        name = to_string(*spec);
    } else {
        name = "M" + std::to_string(size) + "(" + base.name() + ")";
    }
    std::uint64_t order = 1;
    for (unsigned i = 0; i < size * size; ++i) {
        order *= base.order();
        if (order > options.order_cap) break;
    }
    check_order(order, options, name);
    return FiniteRing(
        build_state(detail::make_matrix(base, size), std::move(name), std::move(spec), options));
}

FiniteRing FiniteRing::from_tables(std::string name, std::vector<Elem> add_table,
                                   std::vector<Elem> mul_table, Elem one,
                                   std::vector<std::string> labels) {
    const std::size_t n = labels.size();
    if (n == 0 || add_table.size() != n * n || mul_table.size() != n * n || one >= n) {
        throw RealizeError("inconsistent operation tables for " + name);
    }
    RealizeOptions options;
    options.table_cap = 0;
    return FiniteRing(build_state(
        detail::make_table(std::move(add_table), std::move(mul_table), one, std::move(labels)),
        std::move(name), std::nullopt, options));
}

std::size_t FiniteRing::order() const noexcept { return state_->order; }
Elem FiniteRing::one() const noexcept { return state_->one; }

void FiniteRing::check(Elem x) const {
    if (x >= state_->order) {
        throw std::out_of_range("element index " + std::to_string(x) + " out of range for " +
                                state_->name + " of order " + std::to_string(state_->order));
    }
}

Elem FiniteRing::add(Elem x, Elem y) const {
    check(x);
    check(y);
    if (!state_->add_table.empty()) return state_->add_table[x * state_->order + y];
    return state_->impl->add(x, y);
}

Elem FiniteRing::neg(Elem x) const {
    check(x);
    return state_->neg_table[x];
}

Elem FiniteRing::sub(Elem x, Elem y) const { return add(x, neg(y)); }

Elem FiniteRing::mul(Elem x, Elem y) const {
    check(x);
    check(y);
    if (!state_->mul_table.empty()) return state_->mul_table[x * state_->order + y];
    return state_->impl->mul(x, y);
}

Elem FiniteRing::from_int(std::int64_t k) const {
    const bool negative = k < 0;
    auto magnitude = negative ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    Elem result = 0;
    Elem step = one();
    while (magnitude != 0) {
        if (magnitude & 1U) result = add(result, step);
        step = add(step, step);
        magnitude >>= 1U;
    }
    return negative ? neg(result) : result;
}

Elem FiniteRing::pow(Elem x, std::uint64_t e) const {
    Elem result = one();
    Elem base = x;
    while (e != 0) {
        if (e & 1U) result = mul(result, base);
        base = mul(base, base);
        e >>= 1U;
    }
    return result;
}

bool FiniteRing::is_unit(Elem x) const {
    check(x);
    return state_->units.test(x);
}

const BitSet& FiniteRing::units() const noexcept { return state_->units; }
std::size_t FiniteRing::unit_count() const noexcept { return state_->units.count(); }
bool FiniteRing::two_is_unit() const { return is_unit(add(one(), one())); }
bool FiniteRing::is_commutative() const noexcept { return state_->commutative; }

std::string FiniteRing::label(Elem x) const {
    check(x);
    return state_->impl->label(x);
}

const std::string& FiniteRing::name() const noexcept { return state_->name; }
const std::optional<RingSpec>& FiniteRing::spec() const noexcept { return state_->spec; }
RingKind FiniteRing::kind() const noexcept { return state_->impl->kind(); }
std::span<const FiniteRing> FiniteRing::parts() const noexcept { return state_->parts; }
unsigned FiniteRing::dimension() const noexcept { return state_->impl->dimension(); }

std::vector<Elem> FiniteRing::components(Elem x) const {
    check(x);
    return state_->impl->components(x);
}

Elem FiniteRing::compose(std::span<const Elem> components) const {
    return state_->impl->compose(components);
}

std::optional<Elem> FiniteRing::determinant(Elem x) const {
    check(x);
    return state_->impl->determinant(x);
}

BitSet units_by_inverse_search(const FiniteRing& ring) {
    const std::size_t n = ring.order();
    BitSet out(n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            if (ring.mul(x, y) == ring.one() && ring.mul(y, x) == ring.one()) {
                out.set(x);
                break;
            }
        }
    }
    return out;
}

namespace {

// Returns a description of the first violated axiom for (x, y, z), or empty.
std::string axiom_violation(const FiniteRing& r, Elem x, Elem y, Elem z) {
    if (r.add(r.add(x, y), z) != r.add(x, r.add(y, z))) return "additive associativity";
    if (r.add(x, y) != r.add(y, x)) return "additive commutativity";
    if (r.add(x, 0) != x) return "additive identity";
    if (r.add(x, r.neg(x)) != 0) return "additive inverse";
    if (r.mul(r.mul(x, y), z) != r.mul(x, r.mul(y, z))) return "multiplicative associativity";
    if (r.mul(x, r.add(y, z)) != r.add(r.mul(x, y), r.mul(x, z))) return "left distributivity";
    if (r.mul(r.add(x, y), z) != r.add(r.mul(x, z), r.mul(y, z))) return "right distributivity";
    if (r.mul(r.one(), x) != x || r.mul(x, r.one()) != x) return "multiplicative identity";
    return {};
}

}  // namespace

AxiomReport check_ring_axioms(const FiniteRing& ring, const AxiomCheckOptions& options) {
    AxiomReport report;
    const std::size_t n = ring.order();
    auto record = [&](Elem x, Elem y, Elem z) {
        ++report.triples_checked;
        auto what = axiom_violation(ring, x, y, z);
        if (what.empty()) return true;
        report.ok = false;
        report.failure = what + " fails at (" + ring.label(x) + ", " + ring.label(y) + ", " +
                         ring.label(z) + ")";
        return false;
    };
    if (n <= options.exhaustive_limit) {
        for (Elem x = 0; x < n; ++x) {
            for (Elem y = 0; y < n; ++y) {
                for (Elem z = 0; z < n; ++z) {
                    if (!record(x, y, z)) return report;
                }
            }
        }
        return report;
    }
    report.exhaustive = false;
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
    for (std::size_t i = 0; i < options.samples; ++i) {
        const Elem x = pick(rng);
        const Elem y = pick(rng);
        const Elem z = pick(rng);
        if (!record(x, y, z)) return report;
    }
    return report;
}

std::string format_elements(const FiniteRing& ring, std::span<const Elem> elements) {
    std::string out = "{";
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (i != 0) out += ',';
        out += ring.label(elements[i]);
    }
    return out + '}';
}

std::string format_set(const FiniteRing& ring, const BitSet& set) {
    const auto v = set.to_vector();
    return format_elements(ring, v);
}

}  // namespace unitgraph
