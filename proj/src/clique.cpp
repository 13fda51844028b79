#include <algorithm>
#include <bit>

#include "unitgraph/errors.hpp"
#include "unitgraph/invariants.hpp"

namespace unitgraph {

namespace {

// Smallest-last removal order; ties broken by least index.
std::vector<Vertex> degeneracy_order(const UnitGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
    std::vector<bool> removed(n, false);
    std::vector<Vertex> removal;
    removal.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex best = 0;
        std::size_t best_degree = SIZE_MAX;
        for (Vertex v = 0; v < n; ++v) {
            if (!removed[v] && degree[v] < best_degree) {
                best = v;
                best_degree = degree[v];
            }
        }
        removed[best] = true;
        removal.push_back(best);
        g.neighbors(best).for_each([&](Vertex w) {
            if (!removed[w]) --degree[w];
        });
    }
    std::reverse(removal.begin(), removal.end());
    return removal;
}

class CliqueSearch {
public:
    CliqueSearch(const UnitGraph& g, std::uint64_t budget) : budget_(budget) {
        order_ = degeneracy_order(g);
        const std::size_t n = order_.size();
        std::vector<std::size_t> position(n);
        for (std::size_t i = 0; i < n; ++i) position[order_[i]] = i;
        adj_.assign(n, BitSet(n));
        for (std::size_t i = 0; i < n; ++i) {
            g.neighbors(order_[i]).for_each([&](Vertex w) { adj_[i].set(position[w]); });
        }
    }

    CliqueResult run() {
        const std::size_t n = order_.size();
        if (n == 0) return {};
        seed_greedy();
        BitSet all(n, true);
        expand(all);
        CliqueResult out;
        out.size = best_.size();
        for (auto p : best_) out.witness.push_back(order_[p]);
        std::sort(out.witness.begin(), out.witness.end());
        out.exact = !aborted_;
        out.nodes = nodes_;
        return out;
    }

private:
    void seed_greedy() {
        BitSet candidates(order_.size(), true);
        for (std::size_t v = candidates.first(); v != BitSet::npos; v = candidates.next(v + 1)) {
            best_.push_back(static_cast<Vertex>(v));
            candidates &= adj_[v];
        }
    }

    void expand(BitSet candidates) {
        if (aborted_) return;
        if (++nodes_ > budget_ && budget_ != 0) {
            aborted_ = true;
            return;
        }
        // Greedy colour classes over the candidates in position order.
        std::vector<Vertex> verts;
        std::vector<std::size_t> colors;
        BitSet uncolored = candidates;
        std::size_t color = 0;
        while (uncolored.any()) {
            ++color;
            BitSet available = uncolored;
            for (std::size_t v = available.first(); v != BitSet::npos; v = available.next(v + 1)) {
                uncolored.reset(v);
                available.subtract(adj_[v]);
                verts.push_back(static_cast<Vertex>(v));
                colors.push_back(color);
            }
        }
        for (std::size_t i = verts.size(); i-- > 0;) {
            if (current_.size() + colors[i] <= best_.size()) return;
            const Vertex v = verts[i];
            current_.push_back(v);
            BitSet next = candidates;
            next &= adj_[v];
            if (next.none()) {
                if (current_.size() > best_.size()) best_ = current_;
            } else {
                expand(std::move(next));
            }
            current_.pop_back();
            candidates.reset(v);
            if (aborted_) return;
        }
    }

    std::vector<Vertex> order_;
    std::vector<BitSet> adj_;
    std::vector<Vertex> current_;
    std::vector<Vertex> best_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

}  // namespace

CliqueResult clique_number(const UnitGraph& g, std::uint64_t node_budget) {
    return CliqueSearch(g, node_budget).run();
}

std::size_t clique_number_oracle(const UnitGraph& g) {
    const std::size_t n = g.vertex_count();
    if (n > kOracleMaxVertices) {
        throw CapExceeded("clique oracle limited to " + std::to_string(kOracleMaxVertices) +
                          " vertices, graph has " + std::to_string(n));
    }
    std::vector<std::uint32_t> adj(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
            if (g.adjacent(u, v)) adj[u] |= std::uint32_t{1} << v;
        }
    }
    const std::uint32_t subsets = std::uint32_t{1} << n;
    std::vector<std::uint8_t> clique(subsets, 0);
    clique[0] = 1;
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < subsets; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        const std::uint32_t rest = mask & (mask - 1);
        clique[mask] = clique[rest] && (adj[low] & rest) == rest;
        if (clique[mask]) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    return best;
}

CliqueResult independence_number(const UnitGraph& g, std::uint64_t node_budget) {
    return clique_number(complement(g), node_budget);
}

}  // namespace unitgraph
