#include "unitgraph/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "unitgraph/errors.hpp"

namespace unitgraph {

namespace {

constexpr std::array<std::string_view, kAllTheorems.size()> kTheoremNames = {
    "L2.1a",     "L2.1b",     "L2.1c",           "T2.5-bound",     "T2.5-clique-witness",
    "oneplusJ-clique",        "ideal-independence", "local-dichotomy", "radical-nilpotent",
    "T3.1-iff",  "T3.1-parts", "T3.2a",          "T3.2b",          "T3.2c",
    "matrix-triangle",
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

TheoremVerdict make(TheoremId id, const RingLab& lab) {
    TheoremVerdict v;
    v.theorem = id;
    v.ring = lab.ring().name();
    return v;
}

TheoremVerdict not_applicable(TheoremId id, const RingLab& lab, std::string reason) {
    auto v = make(id, lab);
    v.status = VerdictStatus::not_applicable;
    v.detail = std::move(reason);
    return v;
}

TheoremVerdict skipped(TheoremId id, const RingLab& lab, std::string reason) {
    auto v = make(id, lab);
    v.status = VerdictStatus::skipped;
    v.detail = std::move(reason);
    return v;
}

TheoremVerdict compared(TheoremId id, const RingLab& lab, std::string lhs, std::string rhs,
                        bool holds, std::string detail = {}) {
    auto v = make(id, lab);
    v.lhs = std::move(lhs);
    v.rhs = std::move(rhs);
    v.status = holds ? VerdictStatus::holds : VerdictStatus::fails;
    v.detail = std::move(detail);
    return v;
}

std::string elements_text(const FiniteRing& ring, std::span<const Elem> elems) {
    return format_elements(ring, elems);
}

bool is_power_of_two(std::size_t q) { return q >= 2 && (q & (q - 1)) == 0; }

std::string pairs_text(const FiniteRing& ring, const std::vector<std::vector<Vertex>>& parts) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) out += '|';
        out += elements_text(ring, parts[i]);
    }
    return out;
}

}  // namespace

std::string_view theorem_name(TheoremId id) { return kTheoremNames[static_cast<std::size_t>(id)]; }

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (auto id : kAllTheorems) {
        if (theorem_name(id) == name) return id;
    }
    return std::nullopt;
}

bool theorem_selected(TheoremId id, std::span<const std::string> filters) {
    if (filters.empty()) return true;
    const auto name = theorem_name(id);
    return std::any_of(filters.begin(), filters.end(),
                       [&](const std::string& f) { return name.starts_with(f); });
}

std::string_view status_name(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::holds: return "holds";
        case VerdictStatus::fails: return "fails";
        case VerdictStatus::not_applicable: return "n/a";
        case VerdictStatus::skipped: return "skipped";
    }
    return "?";
}

std::string serialize(const TheoremVerdict& verdict) {
    std::string payload;
    if (!verdict.lhs.empty() || !verdict.rhs.empty()) {
        payload = "lhs=" + verdict.lhs + " rhs=" + verdict.rhs;
    }
    if (!verdict.detail.empty()) {
        if (!payload.empty()) payload += ' ';
        payload += verdict.detail;
    }
    if (payload.empty()) payload = "-";
    std::string out;
    out += theorem_name(verdict.theorem);
    out += '\t';
    out += verdict.ring;
    out += '\t';
    out += status_name(verdict.status);
    out += '\t';
    out += payload;
    return out;
}

// ---------------------------------------------------------------------------
// Semisimple forms

namespace {

struct FormPiece {
    std::vector<SimpleFactor> factors;
    std::vector<FiniteRing> rings;
    std::function<Elem(std::span<const Elem>)> embed;
};

std::optional<std::uint64_t> field_order_of(const RingSpec& spec) {
    if (const auto* z = std::get_if<ZnSpec>(&spec.node)) {
        if (is_prime(z->n)) return z->n;
    } else if (std::get_if<GaloisFieldSpec>(&spec.node) != nullptr) {
        return spec_order(spec);
    }
    return std::nullopt;
}

std::optional<FormPiece> piece_for(const FiniteRing& ring) {
    if (!ring.spec()) return std::nullopt;
    const RingSpec& spec = *ring.spec();
    if (auto q = field_order_of(spec)) {
        return FormPiece{{SimpleFactor{1, *q}}, {ring}, [](std::span<const Elem> c) { return c[0]; }};
    }
    if (const auto* z = std::get_if<ZnSpec>(&spec.node)) {
        std::vector<std::uint64_t> primes;
        std::uint64_t rest = z->n;
        for (std::uint64_t p = 2; p <= rest; ++p) {
            if (rest % p != 0) continue;
            rest /= p;
            if (rest % p == 0) return std::nullopt;  // not squarefree
            primes.push_back(p);
        }
        FormPiece piece;
        std::map<std::vector<Elem>, Elem> crt;
        for (auto p : primes) {
            piece.factors.push_back(SimpleFactor{1, p});
            piece.rings.push_back(FiniteRing::realize(RingSpec::zn(p)));
        }
        for (Elem x = 0; x < z->n; ++x) {
            std::vector<Elem> residues;
            for (auto p : primes) residues.push_back(static_cast<Elem>(x % p));
            crt.emplace(std::move(residues), x);
        }
        piece.embed = [crt = std::move(crt)](std::span<const Elem> c) {
            return crt.at(std::vector<Elem>(c.begin(), c.end()));
        };
        return piece;
    }
    if (const auto* m = std::get_if<MatrixSpec>(&spec.node)) {
        if (auto q = field_order_of(*m->base)) {
            return FormPiece{{SimpleFactor{m->size, *q}}, {ring},
                             [](std::span<const Elem> c) { return c[0]; }};
        }
        return std::nullopt;
    }
    if (std::get_if<ProductSpec>(&spec.node) != nullptr) {
        std::vector<FormPiece> pieces;
        FormPiece out;
        for (const auto& part : ring.parts()) {
            auto p = piece_for(part);
            if (!p) return std::nullopt;
            out.factors.insert(out.factors.end(), p->factors.begin(), p->factors.end());
            out.rings.insert(out.rings.end(), p->rings.begin(), p->rings.end());
            pieces.push_back(std::move(*p));
        }
        out.embed = [ring, pieces = std::move(pieces)](std::span<const Elem> c) {
            std::vector<Elem> components;
            std::size_t offset = 0;
            for (const auto& p : pieces) {
                components.push_back(p.embed(c.subspan(offset, p.factors.size())));
                offset += p.factors.size();
            }
            return ring.compose(components);
        };
        return out;
    }
    return std::nullopt;
}

}  // namespace

std::optional<SemisimpleForm> semisimple_form(const FiniteRing& ring) {
    auto piece = piece_for(ring);
    if (!piece) return std::nullopt;
    return SemisimpleForm{std::move(piece->factors), std::move(piece->rings), std::move(piece->embed)};
}

// ---------------------------------------------------------------------------
// RingLab

struct RingLab::Cache {
    std::optional<UnitGraph> graph;
    std::optional<StructureReport> structure;
    std::optional<Quotient> quotient;
    std::optional<UnitGraph> quotient_graph;
    std::optional<CliqueResult> omega;
    std::optional<CliqueResult> quotient_omega;
    std::optional<ColoringResult> chi;
    std::optional<ColoringResult> quotient_chi;
    std::optional<BipartiteResult> bipartite;
    std::optional<BipartiteResult> quotient_bipartite;
    std::optional<MultipartiteResult> multipartite;
    std::optional<std::vector<IdealSet>> left_ideals;
    std::optional<std::optional<SemisimpleForm>> semisimple;
};

RingLab::RingLab(FiniteRing ring, LabOptions options)
    : ring_(std::move(ring)), options_(std::move(options)), cache_(std::make_shared<Cache>()) {}

const UnitGraph& RingLab::graph() const {
    if (!cache_->graph) {
        auto g = build_unit_graph(ring_);
        if (options_.mutate_graph) options_.mutate_graph(g);
        cache_->graph = std::move(g);
    }
    return *cache_->graph;
}

const StructureReport& RingLab::structure() const {
    if (!cache_->structure) cache_->structure = structure_report(ring_, options_.ideal_cap);
    return *cache_->structure;
}

const Quotient& RingLab::radical_quotient() const {
    if (!cache_->quotient) cache_->quotient = quotient_by_ideal(ring_, structure().radical);
    return *cache_->quotient;
}

const UnitGraph& RingLab::quotient_graph() const {
    if (!cache_->quotient_graph) cache_->quotient_graph = build_unit_graph(radical_quotient().ring);
    return *cache_->quotient_graph;
}

const CliqueResult& RingLab::omega() const {
    if (!cache_->omega) cache_->omega = clique_number(graph(), options_.clique_budget);
    return *cache_->omega;
}

const CliqueResult& RingLab::quotient_omega() const {
    if (!cache_->quotient_omega) {
        cache_->quotient_omega = clique_number(quotient_graph(), options_.clique_budget);
    }
    return *cache_->quotient_omega;
}

const ColoringResult& RingLab::chi() const {
    if (!cache_->chi) {
        auto opts = options_.chromatic;
        opts.known_lower_bound = omega().size;
        cache_->chi = chromatic_number(graph(), opts);
    }
    return *cache_->chi;
}

const ColoringResult& RingLab::quotient_chi() const {
    if (!cache_->quotient_chi) {
        auto opts = options_.chromatic;
        opts.known_lower_bound = quotient_omega().size;
        cache_->quotient_chi = chromatic_number(quotient_graph(), opts);
    }
    return *cache_->quotient_chi;
}

const BipartiteResult& RingLab::bipartite() const {
    if (!cache_->bipartite) cache_->bipartite = is_bipartite(graph());
    return *cache_->bipartite;
}

const BipartiteResult& RingLab::quotient_bipartite() const {
    if (!cache_->quotient_bipartite) cache_->quotient_bipartite = is_bipartite(quotient_graph());
    return *cache_->quotient_bipartite;
}

const MultipartiteResult& RingLab::multipartite() const {
    if (!cache_->multipartite) cache_->multipartite = complete_multipartite(graph());
    return *cache_->multipartite;
}

const std::vector<IdealSet>& RingLab::left_ideals() const {
    if (!cache_->left_ideals) cache_->left_ideals = unitgraph::left_ideals(ring_, options_.ideal_cap);
    return *cache_->left_ideals;
}

const std::optional<SemisimpleForm>& RingLab::semisimple() const {
    if (!cache_->semisimple) cache_->semisimple = semisimple_form(ring_);
    return *cache_->semisimple;
}

// ---------------------------------------------------------------------------
// Verifiers

std::array<TheoremVerdict, 3> verify_radical_monotonicity(const RingLab& lab) {
    const FiniteRing& r = lab.ring();
    const Quotient& q = lab.radical_quotient();
    const UnitGraph& g = lab.graph();
    std::array<TheoremVerdict, 3> out;

    // (a) a clique of G(R/J) lifts through coset representatives.
    {
        const auto& wq = lab.quotient_omega();
        const auto& w = lab.omega();
        if (!wq.exact || !w.exact) {
            out[0] = skipped(TheoremId::radical_omega, lab, "clique search budget exhausted");
        } else {
            std::vector<Elem> lifted;
            for (auto c : wq.witness) lifted.push_back(q.representative[c]);
            const bool lift_ok = is_clique(g, lifted);
            out[0] = compared(TheoremId::radical_omega, lab, std::to_string(wq.size),
                              std::to_string(w.size), wq.size <= w.size && lift_ok,
                              "lifted_clique=" + elements_text(r, lifted) +
                                  (lift_ok ? "" : " lifted_clique_broken"));
        }
    }

    const auto& cq = lab.quotient_chi();
    const auto& c = lab.chi();
    const bool chi_exact = cq.exact && c.exact;

    // (b) c'(a+J) = min{ c(x) : x in a+J } colours G(R/J).
    if (!chi_exact && lab.structure().radical.is_zero()) {
        // J = 0: the projection is the identity, both sides are one graph.
        const std::string bounds = "[" + std::to_string(c.lower) + "," + std::to_string(c.upper) + "]";
        out[1] = compared(TheoremId::radical_chi, lab, bounds, bounds, true, "J(R)=0 quotient_is_identity");
    } else if (!chi_exact) {
        out[1] = skipped(TheoremId::radical_chi, lab, "chromatic number not exact");
    } else {
        const std::size_t m = q.ring.order();
        std::vector<std::uint32_t> induced(m, static_cast<std::uint32_t>(-1));
        for (Elem x = 0; x < r.order(); ++x) {
            induced[q.projection[x]] = std::min(induced[q.projection[x]], c.coloring[x]);
        }
        const bool proper = is_proper_coloring(lab.quotient_graph(), induced);
        out[1] = compared(TheoremId::radical_chi, lab, std::to_string(cq.upper), std::to_string(c.upper),
                          cq.upper <= c.upper && proper,
                          std::string("induced_coloring=") + (proper ? "proper" : "improper"));
    }

    // (c) with 2 not a unit, c'(a) = c(a+J) colours G(R).
    if (r.two_is_unit()) {
        out[2] = not_applicable(TheoremId::radical_chi_equal, lab, "2 is a unit");
    } else if (!chi_exact) {
        out[2] = skipped(TheoremId::radical_chi_equal, lab, "chromatic number not exact");
    } else {
        std::vector<std::uint32_t> lifted(r.order());
        for (Elem x = 0; x < r.order(); ++x) lifted[x] = cq.coloring[q.projection[x]];
        const bool proper = is_proper_coloring(g, lifted);
        out[2] = compared(TheoremId::radical_chi_equal, lab, std::to_string(cq.upper),
                          std::to_string(c.upper), cq.upper == c.upper && proper,
                          std::string("lifted_coloring=") + (proper ? "proper" : "improper"));
    }
    return out;
}

TheoremVerdict verify_unit_clique_lower_bound(const RingLab& lab) {
    constexpr auto id = TheoremId::clique_bound;
    if (!lab.ring().two_is_unit()) return not_applicable(id, lab, "2 is not a unit");
    const auto& s = lab.structure();
    if (!s.maximal_left_ideals) return skipped(id, lab, "ideal enumeration cap exceeded");
    const std::size_t bound = s.maximal_left_ideals->size() + 1;
    const auto& w = lab.omega();
    if (!w.exact && w.size < bound) return skipped(id, lab, "clique search budget exhausted");
    return compared(id, lab, std::to_string(w.size), std::to_string(bound), w.size >= bound,
                    "max_left_ideals=" + std::to_string(s.maximal_left_ideals->size()) +
                        " witness=" + elements_text(lab.ring(), w.witness));
}

TheoremVerdict verify_product_clique_witness(const RingLab& lab) {
    constexpr auto id = TheoremId::product_clique;
    const auto& form = lab.semisimple();
    if (!form) return not_applicable(id, lab, "not a syntactic product of fields");
    for (const auto& f : form->factors) {
        if (f.matrix_size != 1) return not_applicable(id, lab, "has a matrix factor");
        if (f.field_order % 2 == 0) return not_applicable(id, lab, "has a field of characteristic 2");
    }
    const std::size_t k = form->factors.size();
    std::vector<Elem> witness;
    for (std::size_t skip = 0; skip <= k; ++skip) {
        std::vector<Elem> coords;
        for (std::size_t i = 0; i < k; ++i) {
            coords.push_back(i == skip ? form->factor_rings[i].zero() : form->factor_rings[i].one());
        }
        witness.push_back(form->embed(coords));
    }
    std::sort(witness.begin(), witness.end());
    const FiniteRing& r = lab.ring();
    std::size_t unit_sums = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < witness.size(); ++i) {
        for (std::size_t j = i + 1; j < witness.size(); ++j) {
            ++pairs;
            if (r.is_unit(r.add(witness[i], witness[j])) && lab.graph().adjacent(witness[i], witness[j])) {
                ++unit_sums;
            }
        }
    }
    return compared(id, lab, std::to_string(unit_sums), std::to_string(pairs), unit_sums == pairs,
                    "clique_size=" + std::to_string(witness.size()) +
                        " witness=" + elements_text(r, witness));
}

TheoremVerdict verify_product_clique_witness(std::span<const RingSpec> fields,
                                             const LabOptions& options) {
    std::vector<RingSpec> factors(fields.begin(), fields.end());
    RingLab lab(FiniteRing::realize(RingSpec::product(factors), options.realize), options);
    for (const auto& f : fields) {
        const auto ring = FiniteRing::realize(f, options.realize);
        if (ring.unit_count() + 1 != ring.order() || !ring.is_commutative()) {
            return not_applicable(TheoremId::product_clique, lab, to_string(f) + " is not a field");
        }
        if (!ring.two_is_unit()) {
            return not_applicable(TheoremId::product_clique, lab, "2 is not a unit in " + to_string(f));
        }
    }
    return verify_product_clique_witness(lab);
}

TheoremVerdict verify_one_plus_radical_clique(const RingLab& lab) {
    constexpr auto id = TheoremId::one_plus_radical;
    const FiniteRing& r = lab.ring();
    if (!r.two_is_unit()) return not_applicable(id, lab, "2 is not a unit");
    std::vector<Elem> coset;
    lab.structure().radical.elements.for_each([&](Elem j) { coset.push_back(r.add(r.one(), j)); });
    std::sort(coset.begin(), coset.end());
    std::size_t adjacent = 0;
    std::size_t pairs = 0;
    std::string counterexample;
    for (std::size_t i = 0; i < coset.size(); ++i) {
        for (std::size_t j = i + 1; j < coset.size(); ++j) {
            ++pairs;
            if (lab.graph().adjacent(coset[i], coset[j])) {
                ++adjacent;
            } else if (counterexample.empty()) {
                counterexample = " non_adjacent=" + r.label(coset[i]) + "," + r.label(coset[j]);
            }
        }
    }
    return compared(id, lab, std::to_string(adjacent), std::to_string(pairs), adjacent == pairs,
                    "coset=" + elements_text(r, coset) + counterexample);
}

TheoremVerdict verify_ideal_independence(const RingLab& lab) {
    constexpr auto id = TheoremId::ideal_independence;
    const FiniteRing& r = lab.ring();
    const std::vector<IdealSet>* ideals = nullptr;
    try {
        ideals = &lab.left_ideals();
    } catch (const CapExceeded& e) {
        return skipped(id, lab, "ideal enumeration cap exceeded");
    }
    std::size_t proper = 0;
    std::size_t independent = 0;
    std::string counterexample;
    for (const auto& ideal : *ideals) {
        if (ideal.size() == r.order()) continue;
        ++proper;
        const auto members = ideal.elements.to_vector();
        bool coclique = true;
        for (std::size_t i = 0; i < members.size() && coclique; ++i) {
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                if (lab.graph().adjacent(members[i], members[j])) {
                    coclique = false;
                    if (counterexample.empty()) {
                        counterexample = " ideal=" + format_set(r, ideal.elements) + " adjacent=" +
                                         r.label(members[i]) + "," + r.label(members[j]);
                    }
                    break;
                }
            }
        }
        if (coclique) ++independent;
    }
    return compared(id, lab, std::to_string(independent), std::to_string(proper), independent == proper,
                    "proper_left_ideals=" + std::to_string(proper) + counterexample);
}

TheoremVerdict verify_local_unit_dichotomy(const RingLab& lab) {
    constexpr auto id = TheoremId::local_dichotomy;
    const FiniteRing& r = lab.ring();
    const auto& s = lab.structure();
    if (!s.is_local) return skipped(id, lab, "ideal enumeration cap exceeded");
    if (!*s.is_local) {
        for (Elem x = 0; x < r.order(); ++x) {
            if (!r.is_unit(x) && !r.is_unit(r.sub(r.one(), x))) {
                return not_applicable(id, lab, "not local; x=" + r.label(x) + " and 1-x are both non-units");
            }
        }
        return not_applicable(id, lab, "not local");
    }
    std::size_t good = 0;
    std::string counterexample;
    for (Elem x = 0; x < r.order(); ++x) {
        if (r.is_unit(x) || r.is_unit(r.sub(r.one(), x))) {
            ++good;
        } else if (counterexample.empty()) {
            counterexample = "counterexample x=" + r.label(x);
        }
    }
    return compared(id, lab, std::to_string(good), std::to_string(r.order()), good == r.order(),
                    counterexample);
}

TheoremVerdict verify_radical_nilpotent(const RingLab& lab) {
    constexpr auto id = TheoremId::radical_nilpotent;
    const FiniteRing& r = lab.ring();
    const auto& s = lab.structure();
    std::size_t worst = 1;
    std::string counterexample;
    s.radical.elements.for_each([&](Elem x) {
        const auto degree = nilpotency_degree(r, x);
        if (!degree) {
            if (counterexample.empty()) counterexample = " not_nilpotent=" + r.label(x);
            worst = r.order() + 1;
        } else {
            worst = std::max(worst, *degree);
        }
    });
    return compared(id, lab, std::to_string(worst), std::to_string(s.radical_nilpotency_index),
                    worst <= s.radical_nilpotency_index,
                    "radical=" + format_set(r, s.radical.elements) +
                        " index=" + std::to_string(s.radical_nilpotency_index) + counterexample);
}

std::array<TheoremVerdict, 2> verify_multipartite_characterization(const RingLab& lab) {
    const FiniteRing& r = lab.ring();
    const auto& s = lab.structure();
    const auto& mp = lab.multipartite();
    std::array<TheoremVerdict, 2> out;
    if (!s.is_local) {
        out[0] = skipped(TheoremId::multipartite_iff, lab, "ideal enumeration cap exceeded");
        out[1] = skipped(TheoremId::multipartite_parts, lab, "ideal enumeration cap exceeded");
        return out;
    }
    const bool local_char2 = *s.is_local && is_power_of_two(*s.residue_field_order);
    const bool rhs = local_char2 || s.is_field;

    std::string detail;
    if (s.residue_field_order) detail = "residue=" + std::to_string(*s.residue_field_order) + " ";
    detail += "field=" + yes_no(s.is_field);
    if (mp.complete) {
        detail += " r=" + std::to_string(mp.r()) + " parts=" + pairs_text(r, mp.parts);
    } else if (mp.violation) {
        const auto& t = *mp.violation;
        detail += " violation=" + r.label(t[0]) + "~" + r.label(t[1]) + "~" + r.label(t[2]);
    }
    out[0] = compared(TheoremId::multipartite_iff, lab, yes_no(mp.complete), yes_no(rhs),
                      mp.complete == rhs, detail);

    if (!mp.complete) {
        out[1] = not_applicable(TheoremId::multipartite_parts, lab, "not complete multipartite");
        return out;
    }
    std::vector<std::vector<Vertex>> expected;
    std::string shape;
    if (local_char2) {
        // Parts are the cosets a + m of the maximal ideal.
        const auto& m = s.maximal_left_ideals->front().elements;
        BitSet seen(r.order());
        for (Elem a = 0; a < r.order(); ++a) {
            if (seen.test(a)) continue;
            std::vector<Vertex> coset;
            m.for_each([&](Elem j) { coset.push_back(r.add(a, j)); });
            std::sort(coset.begin(), coset.end());
            for (auto v : coset) seen.set(v);
            expected.push_back(std::move(coset));
        }
        shape = "cosets of m";
    } else if (s.is_field) {
        // Odd order field: {0} and the pairs {x, -x}.
        BitSet seen(r.order());
        for (Elem a = 0; a < r.order(); ++a) {
            if (seen.test(a)) continue;
            std::vector<Vertex> part{a};
            if (r.neg(a) != a) part.push_back(r.neg(a));
            std::sort(part.begin(), part.end());
            for (auto v : part) seen.set(v);
            expected.push_back(std::move(part));
        }
        shape = "{0} and {x,-x}";
    } else {
        out[1] = not_applicable(TheoremId::multipartite_parts, lab, "no predicted partition");
        return out;
    }
    const bool match = expected == mp.parts;
    out[1] = compared(TheoremId::multipartite_parts, lab, "r=" + std::to_string(mp.r()),
                      "r=" + std::to_string(expected.size()), match && mp.r() == expected.size(),
                      "expected=" + shape + (match ? "" : " predicted=" + pairs_text(r, expected)));
    return out;
}

namespace {

std::string bipartite_certificate(const FiniteRing& r, const BipartiteResult& b) {
    if (b.bipartite) {
        const auto parts = b.parts();
        return "parts=" + std::to_string(parts[0].size()) + "+" + std::to_string(parts[1].size());
    }
    return "odd_cycle=" + format_elements(r, b.odd_cycle);
}

// Triangle 0, a, b inside one simple factor.
std::optional<std::array<Elem, 3>> factor_triangle(const FiniteRing& f, const SimpleFactor& shape) {
    const Elem m1 = f.one();
    if (shape.matrix_size == 1) {
        if (shape.field_order < 4) return std::nullopt;
        for (Elem g = 0; g < f.order(); ++g) {
            if (g != 0 && g != m1 && g != f.neg(m1)) return std::array<Elem, 3>{0, m1, g};
        }
        return std::nullopt;
    }
    if (shape.matrix_size != 2 && shape.matrix_size != 3) return std::nullopt;
    const FiniteRing& base = f.parts().front();
    const Elem o = base.zero();
    const Elem i = base.one();
    const Elem n = base.neg(i);
    std::vector<Elem> a;
    std::vector<Elem> b;
    if (shape.matrix_size == 2) {
        a = {n, i, o, i};
        b = {i, o, i, i};
    } else {
        a = {i, o, o, o, n, i, o, o, i};
        b = {n, i, o, o, i, o, i, i, i};
    }
    return std::array<Elem, 3>{f.zero(), f.compose(a), f.compose(b)};
}

// Explicit triangle for a semisimple ring with no Z2 summand that is not Z3.
std::optional<std::array<Elem, 3>> semisimple_triangle(const SemisimpleForm& form) {
    const std::size_t k = form.factors.size();
    bool all_z3 = true;
    std::array<std::vector<Elem>, 3> coords;
    for (std::size_t i = 0; i < k; ++i) {
        const auto& shape = form.factors[i];
        const auto& f = form.factor_rings[i];
        if (shape == SimpleFactor{1, 3}) {
            coords[0].push_back(f.zero());
            coords[1].push_back(f.one());
            coords[2].push_back(f.one());
            continue;
        }
        all_z3 = false;
        auto t = factor_triangle(f, shape);
        if (!t) return std::nullopt;
        for (std::size_t j = 0; j < 3; ++j) coords[j].push_back((*t)[j]);
    }
    if (all_z3) {
        if (k < 2) return std::nullopt;
        // Z3^l, l >= 2: three members of the product clique.
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t i = 0; i < k; ++i) {
                coords[j][i] = (i == j) ? form.factor_rings[i].zero() : form.factor_rings[i].one();
            }
        }
    }
    return std::array<Elem, 3>{form.embed(coords[0]), form.embed(coords[1]), form.embed(coords[2])};
}

}  // namespace

std::array<TheoremVerdict, 3> verify_bipartite_characterization(const RingLab& lab) {
    const FiniteRing& r = lab.ring();
    const auto& s = lab.structure();
    const bool two_unit = r.two_is_unit();
    std::array<TheoremVerdict, 3> out;

    // (a) J != 0 and 2 a unit: 0, 1, 1 - x is a triangle for 0 != x in J.
    if (s.radical.is_zero() || !two_unit) {
        out[0] = not_applicable(TheoremId::bipartite_radical, lab,
                                s.radical.is_zero() ? "J(R) = 0" : "2 is not a unit");
    } else {
        const auto x = static_cast<Elem>(s.radical.elements.next(1));
        const std::array<Vertex, 3> triangle{0, r.one(), r.sub(r.one(), x)};
        const bool verified = is_odd_cycle(lab.graph(), triangle);
        const bool bip = lab.bipartite().bipartite;
        out[0] = compared(TheoremId::bipartite_radical, lab, "bipartite=" + yes_no(bip), "bipartite=false",
                          !bip && verified,
                          "x=" + r.label(x) + " triangle=" + format_elements(r, triangle) +
                              (verified ? "" : " triangle_broken"));
    }

    // (b) 2 not a unit: G(R) bipartite iff G(R/J) bipartite.
    if (two_unit) {
        out[1] = not_applicable(TheoremId::bipartite_quotient, lab, "2 is a unit");
    } else {
        const auto& b = lab.bipartite();
        const auto& bq = lab.quotient_bipartite();
        out[1] = compared(TheoremId::bipartite_quotient, lab, "bipartite=" + yes_no(b.bipartite),
                          "quotient_bipartite=" + yes_no(bq.bipartite), b.bipartite == bq.bipartite,
                          bipartite_certificate(r, b) + " quotient_" +
                              bipartite_certificate(lab.radical_quotient().ring, bq));
    }

    // (c) semisimple: bipartite iff R = Z3 or R has a Z2 summand.
    if (!s.radical.is_zero()) {
        out[2] = not_applicable(TheoremId::bipartite_semisimple, lab, "J(R) != 0");
    } else if (!lab.semisimple()) {
        out[2] = skipped(TheoremId::bipartite_semisimple, lab, "no syntactic semisimple form");
    } else {
        const auto& form = *lab.semisimple();
        const bool has_z2 = std::any_of(form.factors.begin(), form.factors.end(),
                                        [](const SimpleFactor& f) { return f == SimpleFactor{1, 2}; });
        const bool just_z3 = form.factors.size() == 1 && form.factors.front() == SimpleFactor{1, 3};
        const bool predicted = has_z2 || just_z3;
        const auto& b = lab.bipartite();
        std::string detail = bipartite_certificate(r, b);
        bool certificate_ok = true;
        if (!predicted) {
            if (auto t = semisimple_triangle(form)) {
                certificate_ok = is_odd_cycle(lab.graph(), *t);
                detail += " certificate_triangle=" + format_elements(r, *t) +
                          (certificate_ok ? "" : " certificate_triangle_broken");
            }
        }
        out[2] = compared(TheoremId::bipartite_semisimple, lab, "bipartite=" + yes_no(b.bipartite),
                          "predicted=" + yes_no(predicted), b.bipartite == predicted && certificate_ok,
                          detail);
    }
    return out;
}

namespace {

TheoremVerdict triangle_verdict(const RingLab& lab, const FiniteRing& m, Elem a, Elem b,
                                const UnitGraph* graph) {
    const Elem sum = m.add(a, b);
    const std::array<Elem, 3> members{a, b, sum};
    std::size_t units = 0;
    std::string dets;
    for (auto x : members) {
        if (m.is_unit(x)) ++units;
        if (auto d = m.determinant(x)) {
            if (!dets.empty()) dets += ',';
            dets += m.parts().front().label(*d);
        }
    }
    bool adjacent = true;
    if (graph != nullptr) {
        adjacent = graph->adjacent(0, a) && graph->adjacent(a, b) && graph->adjacent(b, 0);
    }
    std::string detail = "A=" + m.label(a) + " B=" + m.label(b) + " A+B=" + m.label(sum);
    if (!dets.empty()) detail += " det=" + dets;
    if (!adjacent) detail += " triangle_missing_edge";
    return compared(TheoremId::matrix_triangle, lab, "units=" + std::to_string(units), "units=3",
                    units == 3 && adjacent, detail);
}

std::pair<Elem, Elem> triangle_matrices(const FiniteRing& m, unsigned n) {
    const FiniteRing& base = m.parts().front();
    const Elem o = base.zero();
    const Elem i = base.one();
    const Elem neg = base.neg(i);
    if (n == 2) {
        const std::vector<Elem> a{neg, i, o, i};
        const std::vector<Elem> b{i, o, i, i};
        return {m.compose(a), m.compose(b)};
    }
    const std::vector<Elem> a{i, o, o, o, neg, i, o, o, i};
    const std::vector<Elem> b{neg, i, o, o, i, o, i, i, i};
    return {m.compose(a), m.compose(b)};
}

bool is_field(const FiniteRing& f) { return f.is_commutative() && f.unit_count() + 1 == f.order(); }

}  // namespace

MatrixTriangle construct_matrix_triangle(const FiniteRing& field, unsigned n,
                                         const RealizeOptions& options) {
    if (n != 2 && n != 3) throw std::invalid_argument("matrix triangle needs n = 2 or n = 3");
    if (!is_field(field)) throw std::invalid_argument(field.name() + " is not a field");
    FiniteRing m = FiniteRing::matrix_ring(field, n, options);
    const auto [a, b] = triangle_matrices(m, n);
    RingLab lab(m);
    auto verdict = triangle_verdict(lab, m, a, b, nullptr);
    return MatrixTriangle{std::move(m), a, b, std::move(verdict)};
}

TheoremVerdict verify_matrix_triangle(const RingLab& lab) {
    constexpr auto id = TheoremId::matrix_triangle;
    const FiniteRing& r = lab.ring();
    if (r.kind() != RingKind::matrix) return not_applicable(id, lab, "not a matrix ring");
    const unsigned n = r.dimension();
    if (n != 2 && n != 3) return not_applicable(id, lab, "matrix size is not 2 or 3");
    if (!is_field(r.parts().front())) return not_applicable(id, lab, "base ring is not a field");
    const auto [a, b] = triangle_matrices(r, n);
    return triangle_verdict(lab, r, a, b, &lab.graph());
}

std::vector<TheoremVerdict> verify_all(const RingLab& lab, std::span<const std::string> filters) {
    auto want = [&](TheoremId id) { return theorem_selected(id, filters); };
    auto want_any = [&](std::initializer_list<TheoremId> ids) {
        return std::any_of(ids.begin(), ids.end(), want);
    };
    std::vector<TheoremVerdict> out;
    auto keep = [&](TheoremVerdict v) {
        if (want(v.theorem)) out.push_back(std::move(v));
    };
    if (want_any({TheoremId::radical_omega, TheoremId::radical_chi, TheoremId::radical_chi_equal})) {
        for (auto& v : verify_radical_monotonicity(lab)) keep(std::move(v));
    }
    if (want(TheoremId::clique_bound)) keep(verify_unit_clique_lower_bound(lab));
    if (want(TheoremId::product_clique)) keep(verify_product_clique_witness(lab));
    if (want(TheoremId::one_plus_radical)) keep(verify_one_plus_radical_clique(lab));
    if (want(TheoremId::ideal_independence)) keep(verify_ideal_independence(lab));
    if (want(TheoremId::local_dichotomy)) keep(verify_local_unit_dichotomy(lab));
    if (want(TheoremId::radical_nilpotent)) keep(verify_radical_nilpotent(lab));
    if (want_any({TheoremId::multipartite_iff, TheoremId::multipartite_parts})) {
        for (auto& v : verify_multipartite_characterization(lab)) keep(std::move(v));
    }
    if (want_any({TheoremId::bipartite_radical, TheoremId::bipartite_quotient,
                  TheoremId::bipartite_semisimple})) {
        for (auto& v : verify_bipartite_characterization(lab)) keep(std::move(v));
    }
    if (want(TheoremId::matrix_triangle)) keep(verify_matrix_triangle(lab));
    return out;
}

CatalogRun run_catalog(std::span<const std::string> specs, std::span<const std::string> filters,
                       const LabOptions& options, unsigned jobs) {
    struct Slot {
        std::vector<TheoremVerdict> verdicts;
        std::string error;
    };
    std::vector<Slot> slots(specs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < specs.size(); i = next++) {
            try {
                RingLab lab(FiniteRing::realize(specs[i], options.realize), options);
                slots[i].verdicts = verify_all(lab, filters);
            } catch (const std::exception& e) {
                slots[i].error = specs[i] + ": " + e.what();
            }
        }
    };
    jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(specs.size())));
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    }
    CatalogRun run;
    for (auto& slot : slots) {
        if (!slot.error.empty()) run.errors.push_back(std::move(slot.error));
        for (auto& v : slot.verdicts) {
            switch (v.status) {
                case VerdictStatus::holds: ++run.holds; break;
                case VerdictStatus::fails: ++run.fails; break;
                case VerdictStatus::not_applicable: ++run.not_applicable; break;
                case VerdictStatus::skipped: ++run.skipped; break;
            }
            run.verdicts.push_back(std::move(v));
        }
    }
    return run;
}

}  // namespace unitgraph
