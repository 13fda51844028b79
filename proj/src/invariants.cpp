#include "unitgraph/invariants.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace unitgraph {

std::array<std::vector<Vertex>, 2> BipartiteResult::parts() const {
    std::array<std::vector<Vertex>, 2> out;
    if (!bipartite) return out;
    for (Vertex v = 0; v < side.size(); ++v) out[side[v]].push_back(v);
    return out;
}

BipartiteResult is_bipartite(const UnitGraph& g) {
    const std::size_t n = g.vertex_count();
    constexpr std::uint8_t kUnseen = 2;
    BipartiteResult out;
    out.side.assign(n, kUnseen);
    std::vector<Vertex> parent(n, 0);
    std::vector<std::size_t> depth(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (out.side[s] != kUnseen) continue;
        out.side[s] = 0;
        parent[s] = s;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex u = queue.front();
            queue.pop_front();
            for (std::size_t w = g.neighbors(u).first(); w != BitSet::npos;
                 w = g.neighbors(u).next(w + 1)) {
                const auto v = static_cast<Vertex>(w);
                if (out.side[v] == kUnseen) {
                    out.side[v] = static_cast<std::uint8_t>(1 - out.side[u]);
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (out.side[v] == out.side[u]) {
                    // Both endpoints sit at equal BFS depth; climb to the
                    // common ancestor to close an odd cycle.
                    std::vector<Vertex> left{u};
                    std::vector<Vertex> right{v};
                    Vertex a = u;
                    Vertex b = v;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    out.odd_cycle = left;
                    out.odd_cycle.insert(out.odd_cycle.end(), right.rbegin(), right.rend());
                    out.bipartite = false;
                    out.side.clear();
                    return out;
                }
            }
        }
    }
    return out;
}

MultipartiteResult complete_multipartite(const UnitGraph& g) {
    const std::size_t n = g.vertex_count();
    MultipartiteResult out;
    std::vector<BitSet> cls(n);
    for (Vertex v = 0; v < n; ++v) cls[v] = ~g.neighbors(v);
    for (Vertex v = 0; v < n; ++v) {
        for (std::size_t u = cls[v].first(); u != BitSet::npos; u = cls[v].next(u + 1)) {
            if (cls[u] == cls[v]) continue;
            BitSet only_v = cls[v];
            only_v.subtract(cls[u]);
            if (only_v.any()) {
                out.violation = std::array<Vertex, 3>{static_cast<Vertex>(u), v,
                                                      static_cast<Vertex>(only_v.first())};
            } else {
                BitSet only_u = cls[u];
                only_u.subtract(cls[v]);
                out.violation = std::array<Vertex, 3>{v, static_cast<Vertex>(u),
                                                      static_cast<Vertex>(only_u.first())};
            }
            return out;
        }
    }
    out.complete = true;
    BitSet assigned(n);
    for (Vertex v = 0; v < n; ++v) {
        if (assigned.test(v)) continue;
        out.parts.push_back(cls[v].to_vector());
        assigned |= cls[v];
    }
    return out;
}

bool is_clique(const UnitGraph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j])) return false;
        }
    }
    return std::set<Vertex>(vertices.begin(), vertices.end()).size() == vertices.size();
}

bool is_coclique(const UnitGraph& g, std::span<const Vertex> vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (g.adjacent(vertices[i], vertices[j])) return false;
        }
    }
    return std::set<Vertex>(vertices.begin(), vertices.end()).size() == vertices.size();
}

bool is_proper_coloring(const UnitGraph& g, std::span<const std::uint32_t> coloring) {
    if (coloring.size() != g.vertex_count()) return false;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        bool ok = true;
        g.neighbors(u).for_each([&](Vertex v) { ok = ok && coloring[u] != coloring[v]; });
        if (!ok) return false;
    }
    return true;
}

bool is_odd_cycle(const UnitGraph& g, std::span<const Vertex> cycle) {
    const std::size_t k = cycle.size();
    if (k < 3 || k % 2 == 0) return false;
    if (std::set<Vertex>(cycle.begin(), cycle.end()).size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % k])) return false;
    }
    return true;
}

InvariantReport compute_invariants(const UnitGraph& g, const InvariantOptions& options) {
    InvariantReport out;
    out.omega = clique_number(g, options.node_budget);
    out.alpha = independence_number(g, options.node_budget);
    ChromaticOptions chromatic = options.chromatic;
    chromatic.known_lower_bound = out.omega.size;
    out.chi = chromatic_number(g, chromatic);
    out.bipartite = is_bipartite(g);
    out.multipartite = complete_multipartite(g);
    return out;
}

}  // namespace unitgraph
