#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "unitgraph/finite_ring.hpp"
#include "unitgraph/invariants.hpp"
#include "unitgraph/structure.hpp"
#include "unitgraph/unit_graph.hpp"

namespace unitgraph {

enum class TheoremId {
    radical_omega,          // L2.1a
    radical_chi,            // L2.1b
    radical_chi_equal,      // L2.1c
    clique_bound,           // T2.5-bound
    product_clique,         // T2.5-clique-witness
    one_plus_radical,       // oneplusJ-clique
    ideal_independence,     // ideal-independence
    local_dichotomy,        // local-dichotomy
    radical_nilpotent,      // radical-nilpotent
    multipartite_iff,       // T3.1-iff
    multipartite_parts,     // T3.1-parts
    bipartite_radical,      // T3.2a
    bipartite_quotient,     // T3.2b
    bipartite_semisimple,   // T3.2c
    matrix_triangle,        // matrix-triangle
};

inline constexpr std::array kAllTheorems = {
    TheoremId::radical_omega,      TheoremId::radical_chi,        TheoremId::radical_chi_equal,
    TheoremId::clique_bound,       TheoremId::product_clique,     TheoremId::one_plus_radical,
    TheoremId::ideal_independence, TheoremId::local_dichotomy,    TheoremId::radical_nilpotent,
    TheoremId::multipartite_iff,   TheoremId::multipartite_parts, TheoremId::bipartite_radical,
    TheoremId::bipartite_quotient, TheoremId::bipartite_semisimple, TheoremId::matrix_triangle,
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> parse_theorem_id(std::string_view name);
/// A filter selects every theorem whose name starts with it ("T3.1" selects
/// T3.1-iff and T3.1-parts). An empty filter list selects everything.
bool theorem_selected(TheoremId id, std::span<const std::string> filters);

enum class VerdictStatus { holds, fails, not_applicable, skipped };
std::string_view status_name(VerdictStatus status);

struct TheoremVerdict {
    TheoremId theorem{};
    std::string ring;
    /// Quantities compared by the check; empty for n/a and skipped.
    std::string lhs;
    std::string rhs;
    VerdictStatus status = VerdictStatus::skipped;
    /// Witness, counterexample or reason, as compact text.
    std::string detail;
};

/// `theorem_id TAB ring_spec TAB holds|fails|n/a|skipped TAB payload`
std::string serialize(const TheoremVerdict& verdict);

struct LabOptions {
    RealizeOptions realize;
    std::size_t ideal_cap = kDefaultIdealCap;
    std::uint64_t clique_budget = 0;
    ChromaticOptions chromatic{256, 2'000'000, 0};
    /// Test hook applied to G(R) right after it is built.
    std::function<void(UnitGraph&)> mutate_graph;
};

/// M_n(GF(q)), written as (n, q). Z_p is (1, p).
struct SimpleFactor {
    unsigned matrix_size = 1;
    std::uint64_t field_order = 2;

    friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

/// A syntactic Artin-Wedderburn form R = prod M_{n_i}(GF(q_i)), with an
/// embedding of coordinate tuples into R.
struct SemisimpleForm {
    std::vector<SimpleFactor> factors;
    std::vector<FiniteRing> factor_rings;
    /// One element per factor ring -> element of R.
    std::function<Elem(std::span<const Elem>)> embed;
};

/// Recognizes fields, Z_n with n squarefree, M_n over fields and products of
/// these. Returns nullopt for every other ring (including table rings).
std::optional<SemisimpleForm> semisimple_form(const FiniteRing& ring);

/// Memoized facts about one ring, shared by the verifiers. Not thread safe;
/// each worker owns its own RingLab.
class RingLab {
public:
    // Implicit so that verifiers accept a FiniteRing directly.
    RingLab(FiniteRing ring, LabOptions options = {});  // NOLINT(google-explicit-constructor)

    const FiniteRing& ring() const { return ring_; }
    const LabOptions& options() const { return options_; }

    const UnitGraph& graph() const;
    const StructureReport& structure() const;
    const Quotient& radical_quotient() const;
    const UnitGraph& quotient_graph() const;
    const CliqueResult& omega() const;
    const CliqueResult& quotient_omega() const;
    const ColoringResult& chi() const;
    const ColoringResult& quotient_chi() const;
    const BipartiteResult& bipartite() const;
    const BipartiteResult& quotient_bipartite() const;
    const MultipartiteResult& multipartite() const;
    /// Throws CapExceeded beyond the ideal cap.
    const std::vector<IdealSet>& left_ideals() const;
    const std::optional<SemisimpleForm>& semisimple() const;

private:
    struct Cache;

    FiniteRing ring_;
    LabOptions options_;
    std::shared_ptr<Cache> cache_;
};

/// R -> R/J(R): omega monotone, chi monotone, chi equal when 2 is not a unit.
std::array<TheoremVerdict, 3> verify_radical_monotonicity(const RingLab& lab);
/// omega(G(R)) >= |Max_l(R)| + 1 when 2 is a unit.
TheoremVerdict verify_unit_clique_lower_bound(const RingLab& lab);
/// The set {(0,1,..,1), (1,0,1,..,1), .., (1,..,1,0), (1,..,1)} is a clique
/// of G(R) for a product of odd-characteristic fields.
TheoremVerdict verify_product_clique_witness(const RingLab& lab);
TheoremVerdict verify_product_clique_witness(std::span<const RingSpec> fields,
                                             const LabOptions& options = {});
TheoremVerdict verify_one_plus_radical_clique(const RingLab& lab);
TheoremVerdict verify_ideal_independence(const RingLab& lab);
TheoremVerdict verify_local_unit_dichotomy(const RingLab& lab);
/// [iff, parts]
std::array<TheoremVerdict, 2> verify_multipartite_characterization(const RingLab& lab);
/// [radical, quotient, semisimple]
std::array<TheoremVerdict, 3> verify_bipartite_characterization(const RingLab& lab);
TheoremVerdict verify_radical_nilpotent(const RingLab& lab);

struct MatrixTriangle {
    FiniteRing matrices;
    Elem a = 0;
    Elem b = 0;
    TheoremVerdict verdict;
};

/// The explicit 2x2 / 3x3 matrices A, B with {0, A, B} a triangle in
/// G(M_n(field)). Throws std::invalid_argument unless n is 2 or 3 and
/// `field` is a field.
MatrixTriangle construct_matrix_triangle(const FiniteRing& field, unsigned n,
                                         const RealizeOptions& options = {});
/// n/a unless the ring is M_2 or M_3 over a field.
TheoremVerdict verify_matrix_triangle(const RingLab& lab);

/// Every selected verifier, in kAllTheorems order.
std::vector<TheoremVerdict> verify_all(const RingLab& lab, std::span<const std::string> filters = {});

struct CatalogRun {
    std::vector<TheoremVerdict> verdicts;
    /// "spec: message" for entries that failed to parse or realize.
    std::vector<std::string> errors;
    std::size_t holds = 0;
    std::size_t fails = 0;
    std::size_t not_applicable = 0;
    std::size_t skipped = 0;

    bool ok() const { return fails == 0 && errors.empty(); }
};

/// Runs the selected verifiers on each spec using up to `jobs` workers.
/// Verdicts are ordered by spec position regardless of completion order.
CatalogRun run_catalog(std::span<const std::string> specs, std::span<const std::string> filters,
                       const LabOptions& options = {}, unsigned jobs = 1);

}  // namespace unitgraph
