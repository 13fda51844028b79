#include "unitgraph/structure.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace unitgraph {

IdealSet principal_left_ideal(const FiniteRing& ring, Elem x) {
    BitSet out(ring.order());
    for (Elem a = 0; a < ring.order(); ++a) out.set(ring.mul(a, x));
    return IdealSet{std::move(out), Sidedness::left};
}

namespace {

// Adds the cyclic subgroup of g to the subgroup h (h := h + <g>).
void absorb(const FiniteRing& ring, BitSet& h, Elem g) {
    if (h.test(g)) return;
    const auto base = h.to_vector();
    Elem multiple = g;
    while (!h.test(multiple)) {
        for (auto s : base) h.set(ring.add(s, multiple));
        multiple = ring.add(multiple, g);
    }
}

}  // namespace

BitSet additive_closure(const FiniteRing& ring, const BitSet& generators) {
    BitSet h(ring.order());
    h.set(0);
    generators.for_each([&](Elem g) { absorb(ring, h, g); });
    return h;
}

bool is_left_ideal(const FiniteRing& ring, const BitSet& set) {
    if (!set.test(0)) return false;
    const auto elems = set.to_vector();
    for (auto x : elems) {
        if (!set.test(ring.neg(x))) return false;
        for (auto y : elems) {
            if (!set.test(ring.add(x, y))) return false;
        }
        for (Elem a = 0; a < ring.order(); ++a) {
            if (!set.test(ring.mul(a, x))) return false;
        }
    }
    return true;
}

bool is_two_sided_ideal(const FiniteRing& ring, const BitSet& set) {
    if (!is_left_ideal(ring, set)) return false;
    bool ok = true;
    set.for_each([&](Elem x) {
        for (Elem a = 0; a < ring.order() && ok; ++a) ok = set.test(ring.mul(x, a));
    });
    return ok;
}

std::vector<IdealSet> left_ideals(const FiniteRing& ring, std::size_t cap) {
    if (ring.order() > cap) {
        throw CapExceeded("left-ideal enumeration for " + ring.name() + " (order " +
                          std::to_string(ring.order()) + ") exceeds cap " + std::to_string(cap));
    }
    std::unordered_set<BitSet, BitSetHash> seen;
    std::vector<BitSet> all;
    for (Elem x = 0; x < ring.order(); ++x) {
        auto ideal = principal_left_ideal(ring, x).elements;
        if (seen.insert(ideal).second) all.push_back(std::move(ideal));
    }
    // Close under sums: every new ideal is summed with everything before it.
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (all[i].is_subset_of(all[j]) || all[j].is_subset_of(all[i])) continue;
            BitSet sum = all[i];
            all[j].for_each([&](Elem g) { absorb(ring, sum, g); });
            if (seen.insert(sum).second) all.push_back(std::move(sum));
        }
    }
    std::sort(all.begin(), all.end(), [](const BitSet& a, const BitSet& b) { return lex_compare(a, b) < 0; });
    std::vector<IdealSet> out;
    out.reserve(all.size());
    for (auto& s : all) out.push_back(IdealSet{std::move(s), Sidedness::left});
    return out;
}

std::vector<IdealSet> maximal_left_ideals(const FiniteRing& ring, std::size_t cap) {
    auto all = left_ideals(ring, cap);
    std::vector<IdealSet> proper;
    for (auto& ideal : all) {
        if (ideal.size() < ring.order()) proper.push_back(std::move(ideal));
    }
    std::vector<IdealSet> out;
    for (const auto& candidate : proper) {
        const bool dominated = std::any_of(proper.begin(), proper.end(), [&](const IdealSet& other) {
            return other.size() > candidate.size() && candidate.elements.is_subset_of(other.elements);
        });
        if (!dominated) out.push_back(candidate);
    }
    return out;
}

IdealSet jacobson_radical(const FiniteRing& ring) {
    BitSet out(ring.order());
    for (Elem x = 0; x < ring.order(); ++x) {
        bool quasi_regular = true;
        for (Elem a = 0; a < ring.order() && quasi_regular; ++a) {
            quasi_regular = ring.is_unit(ring.sub(ring.one(), ring.mul(a, x)));
        }
        if (quasi_regular) out.set(x);
    }
    return IdealSet{std::move(out), Sidedness::two_sided};
}

IdealSet radical_by_intersection(const FiniteRing& ring, std::span<const IdealSet> maximal) {
    BitSet out(ring.order(), true);
    for (const auto& m : maximal) out &= m.elements;
    return IdealSet{std::move(out), Sidedness::two_sided};
}

std::size_t radical_nilpotency_index(const FiniteRing& ring) {
    return radical_nilpotency_index(ring, jacobson_radical(ring));
}

std::size_t radical_nilpotency_index(const FiniteRing& ring, const IdealSet& radical) {
    const auto generators = radical.elements.to_vector();
    BitSet power = radical.elements;  // J^i
    std::size_t index = 1;
    while (power.count() > 1) {
        BitSet products(ring.order());
        power.for_each([&](Elem a) {
            for (auto b : generators) products.set(ring.mul(a, b));
        });
        BitSet next = additive_closure(ring, products);
        if (next == power) {
            throw std::logic_error("radical of " + ring.name() + " is not nilpotent");
        }
        power = std::move(next);
        ++index;
    }
    return index;
}

std::optional<std::size_t> nilpotency_degree(const FiniteRing& ring, Elem x) {
    Elem p = x;
    for (std::size_t i = 1; i <= ring.order(); ++i) {
        if (p == 0) return i;
        p = ring.mul(p, x);
    }
    return std::nullopt;
}

Quotient quotient_by_ideal(const FiniteRing& ring, const IdealSet& ideal) {
    const std::size_t n = ring.order();
    if (ideal.elements.size() != n) throw std::invalid_argument("ideal belongs to a different ring");
    if (ideal.size() == n) throw std::invalid_argument("cannot quotient by the whole ring");
    if (!is_two_sided_ideal(ring, ideal.elements)) {
        throw std::invalid_argument("quotient requires a two-sided ideal");
    }
    const auto members = ideal.elements.to_vector();
    constexpr Elem kUnassigned = static_cast<Elem>(-1);
    std::vector<Elem> projection(n, kUnassigned);
    std::vector<Elem> representative;
    for (Elem x = 0; x < n; ++x) {
        if (projection[x] != kUnassigned) continue;
        const auto coset = static_cast<Elem>(representative.size());
        representative.push_back(x);
        for (auto j : members) projection[ring.add(x, j)] = coset;
    }
    const std::size_t m = representative.size();
    std::vector<Elem> add_table(m * m);
    std::vector<Elem> mul_table(m * m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            add_table[a * m + b] = projection[ring.add(representative[a], representative[b])];
            mul_table[a * m + b] = projection[ring.mul(representative[a], representative[b])];
        }
    }
    // Coset operations must not depend on the representatives chosen.
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = 0; y < n; ++y) {
            const auto px = projection[x];
            const auto py = projection[y];
            if (projection[ring.add(x, y)] != add_table[px * m + py] ||
                projection[ring.mul(x, y)] != mul_table[px * m + py]) {
                throw std::logic_error("induced operations on " + ring.name() +
                                       " cosets are not well defined");
            }
        }
    }
    std::vector<std::string> labels;
    labels.reserve(m);
    for (auto r : representative) labels.push_back("[" + ring.label(r) + "]");
    auto quotient = FiniteRing::from_tables(ring.name() + " / " + format_set(ring, ideal.elements),
                                            std::move(add_table), std::move(mul_table),
                                            projection[ring.one()], std::move(labels));
    return Quotient{std::move(quotient), std::move(projection), std::move(representative)};
}

StructureReport structure_report(const FiniteRing& ring, std::size_t ideal_cap) {
    StructureReport report;
    report.order = ring.order();
    report.unit_count = ring.unit_count();
    report.radical = jacobson_radical(ring);
    report.radical_nilpotency_index = radical_nilpotency_index(ring, report.radical);
    report.is_division = report.unit_count + 1 == report.order;
    report.is_commutative = ring.is_commutative();
    report.is_field = report.is_division && report.is_commutative;
    report.two_is_unit = ring.two_is_unit();
    if (ring.order() <= ideal_cap) {
        auto maximal = maximal_left_ideals(ring, ideal_cap);
        if (radical_by_intersection(ring, maximal) != report.radical) {
            throw std::logic_error("quasi-regular radical of " + ring.name() +
                                   " differs from the intersection of maximal left ideals");
        }
        report.is_local = maximal.size() == 1;
        if (*report.is_local) report.residue_field_order = ring.order() / maximal.front().size();
        report.maximal_left_ideals = std::move(maximal);
    }
    return report;
}

}  // namespace unitgraph
