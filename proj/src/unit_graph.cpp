#include "unitgraph/unit_graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace unitgraph {

UnitGraph::UnitGraph(std::size_t vertex_count)
    : rows_(vertex_count, BitSet(vertex_count)), labels_(vertex_count) {
    for (std::size_t v = 0; v < vertex_count; ++v) labels_[v] = std::to_string(v);
}

void UnitGraph::check(Vertex v) const {
    if (v >= rows_.size()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for graph on " +
                                std::to_string(rows_.size()) + " vertices");
    }
}

std::size_t UnitGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : rows_) twice += row.count();
    return twice / 2;
}

bool UnitGraph::adjacent(Vertex u, Vertex v) const {
    check(u);
    check(v);
    return rows_[u].test(v);
}

const BitSet& UnitGraph::neighbors(Vertex v) const {
    check(v);
    return rows_[v];
}

std::size_t UnitGraph::degree(Vertex v) const { return neighbors(v).count(); }

std::size_t UnitGraph::max_degree() const {
    std::size_t best = 0;
    for (const auto& row : rows_) best = std::max(best, row.count());
    return best;
}

void UnitGraph::add_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    if (u == v) throw std::invalid_argument("simple graphs have no loops");
    rows_[u].set(v);
    rows_[v].set(u);
}

void UnitGraph::remove_edge(Vertex u, Vertex v) {
    check(u);
    check(v);
    rows_[u].reset(v);
    rows_[v].reset(u);
}

const std::string& UnitGraph::label(Vertex v) const {
    check(v);
    return labels_[v];
}

void UnitGraph::set_labels(std::vector<std::string> labels) {
    if (labels.size() != rows_.size()) throw std::invalid_argument("label count mismatch");
    labels_ = std::move(labels);
}

UnitGraph build_unit_graph(const FiniteRing& ring) {
    const std::size_t n = ring.order();
    UnitGraph g(n);
    for (Elem x = 0; x < n; ++x) {
        for (Elem y = x + 1; y < n; ++y) {
            if (ring.is_unit(ring.add(x, y))) g.add_edge(x, y);
        }
    }
    std::vector<std::string> labels(n);
    for (Elem x = 0; x < n; ++x) labels[x] = ring.label(x);
    g.set_labels(std::move(labels));
    return g;
}

UnitGraph complement(const UnitGraph& g) {
    const std::size_t n = g.vertex_count();
    UnitGraph out(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) out.add_edge(u, v);
        }
    }
    std::vector<std::string> labels(n);
    for (Vertex v = 0; v < n; ++v) labels[v] = g.label(v);
    out.set_labels(std::move(labels));
    return out;
}

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + '"';
}

}  // namespace

std::string export_dot(const UnitGraph& g, const std::string& name) {
    std::ostringstream os;
    os << "graph " << dot_quote(name) << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v << " [label=" << dot_quote(g.label(v)) << "];\n";
    }
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        g.neighbors(u).for_each([&](Vertex v) {
            if (v > u) os << "  " << u << " -- " << v << ";\n";
        });
    }
    os << "}\n";
    return os.str();
}

std::string export_edgelist(const UnitGraph& g) {
    std::string out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        g.neighbors(u).for_each([&](Vertex v) {
            if (v <= u) return;
            if (!out.empty()) out += '\n';
            out += std::to_string(u) + ' ' + std::to_string(v);
        });
    }
    return out;
}

UnitGraph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    UnitGraph g(n);
    std::bernoulli_distribution coin(p);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
    return g;
}

}  // namespace unitgraph
