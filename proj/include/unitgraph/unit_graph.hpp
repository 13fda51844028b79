#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "unitgraph/bitset.hpp"
#include "unitgraph/finite_ring.hpp"

namespace unitgraph {

using Vertex = std::uint32_t;

/// Simple undirected graph stored as dense adjacency bit rows. Unit graphs
/// use ring element indices as vertices.
class UnitGraph {
public:
    UnitGraph() = default;
    /// Edgeless graph with labels "0".."n-1".
    explicit UnitGraph(std::size_t vertex_count);

    std::size_t vertex_count() const noexcept { return rows_.size(); }
    std::size_t edge_count() const;

    bool adjacent(Vertex u, Vertex v) const;
    /// Throws std::out_of_range for v >= vertex_count().
    const BitSet& neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::size_t max_degree() const;

    /// Loops are rejected with std::invalid_argument.
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);

    const std::string& label(Vertex v) const;
    void set_labels(std::vector<std::string> labels);

    friend bool operator==(const UnitGraph& a, const UnitGraph& b) { return a.rows_ == b.rows_; }

private:
    void check(Vertex v) const;

    std::vector<BitSet> rows_;
    std::vector<std::string> labels_;
};

/// G(R): distinct x, y adjacent iff x + y is a unit. 2x being a unit never
/// creates a loop.
UnitGraph build_unit_graph(const FiniteRing& ring);

UnitGraph complement(const UnitGraph& g);

/// Vertices ascending, edges lexicographic (u < v), undirected DOT syntax,
/// vertex labels taken from the graph.
std::string export_dot(const UnitGraph& g, const std::string& name = "G");

/// One "u v" line per edge (u < v), lexicographic, joined by newlines with no
/// trailing newline.
std::string export_edgelist(const UnitGraph& g);

/// Erdos-Renyi G(n, p) drawn from `rng`; edges decided in lexicographic order.
UnitGraph random_graph(std::size_t n, double p, std::mt19937_64& rng);

}  // namespace unitgraph
