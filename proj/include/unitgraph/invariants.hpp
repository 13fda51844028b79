#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "unitgraph/unit_graph.hpp"

namespace unitgraph {

/// Maximum clique (or coclique) with a witness. When `exact` is false the
/// node budget ran out and `size` is only a lower bound realised by `witness`.
struct CliqueResult {
    std::size_t size = 0;
    std::vector<Vertex> witness;
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// Exact maximum clique: branch and bound over bit rows with vertices in
/// degeneracy order and greedy-colouring bounds. node_budget == 0 means
/// unlimited.
CliqueResult clique_number(const UnitGraph& g, std::uint64_t node_budget = 0);

inline constexpr std::size_t kOracleMaxVertices = 20;

/// Exhaustive subset enumeration; throws CapExceeded above 20 vertices.
std::size_t clique_number_oracle(const UnitGraph& g);

/// alpha(g) = omega(complement(g)).
CliqueResult independence_number(const UnitGraph& g, std::uint64_t node_budget = 0);

struct ChromaticOptions {
    std::size_t exact_cap = 256;
    std::uint64_t node_budget = 0;
    /// A proven lower bound (typically omega); 0 computes the clique number.
    std::size_t known_lower_bound = 0;
};

/// chi(g) as [lower, upper]. `coloring` is a proper colouring with `upper`
/// colours (colours 0..upper-1). exact implies lower == upper.
struct ColoringResult {
    std::size_t lower = 0;
    std::size_t upper = 0;
    bool exact = false;
    std::vector<std::uint32_t> coloring;
};

/// Greedy colouring, vertices by descending degree (ties: least index),
/// each taking the least colour absent from its coloured neighbours.
std::vector<std::uint32_t> greedy_coloring(const UnitGraph& g);

/// Exact chi by DSATUR branch and bound with colour-class symmetry
/// breaking, deepening from the clique bound up to the greedy bound. Above
/// exact_cap vertices only the bounds [omega, greedy] are reported.
ColoringResult chromatic_number(const UnitGraph& g, const ChromaticOptions& options = {});

struct BipartiteResult {
    bool bipartite = true;
    /// Side (0/1) of each vertex when bipartite; the least vertex of every
    /// component is on side 0.
    std::vector<std::uint8_t> side;
    /// Odd cycle v0, v1, ..., vk when not bipartite; the edge vk-v0 closes it.
    std::vector<Vertex> odd_cycle;

    std::array<std::vector<Vertex>, 2> parts() const;
};

BipartiteResult is_bipartite(const UnitGraph& g);

struct MultipartiteResult {
    bool complete = false;
    /// Classes of "equal or non-adjacent", ascending by least member.
    std::vector<std::vector<Vertex>> parts;
    /// When not complete: x ~ y and y ~ z but x !~ z (x, z adjacent).
    std::optional<std::array<Vertex, 3>> violation;

    std::size_t r() const { return parts.size(); }
};

MultipartiteResult complete_multipartite(const UnitGraph& g);

bool is_clique(const UnitGraph& g, std::span<const Vertex> vertices);
bool is_coclique(const UnitGraph& g, std::span<const Vertex> vertices);
bool is_proper_coloring(const UnitGraph& g, std::span<const std::uint32_t> coloring);
/// Checks that `cycle` is a simple cycle of g with odd length >= 3.
bool is_odd_cycle(const UnitGraph& g, std::span<const Vertex> cycle);

struct InvariantOptions {
    ChromaticOptions chromatic;
    std::uint64_t node_budget = 0;
};

struct InvariantReport {
    CliqueResult omega;
    CliqueResult alpha;
    ColoringResult chi;
    BipartiteResult bipartite;
    MultipartiteResult multipartite;

    bool exact() const { return omega.exact && alpha.exact && chi.exact; }
};

InvariantReport compute_invariants(const UnitGraph& g, const InvariantOptions& options = {});

}  // namespace unitgraph
