#include <algorithm>
#include <numeric>

#include "unitgraph/invariants.hpp"

namespace unitgraph {

std::vector<std::uint32_t> greedy_coloring(const UnitGraph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    constexpr auto kNone = static_cast<std::uint32_t>(-1);
    std::vector<std::uint32_t> color(n, kNone);
    std::vector<bool> taken;
    for (auto v : order) {
        taken.assign(n + 1, false);
        g.neighbors(v).for_each([&](Vertex w) {
            if (color[w] != kNone) taken[color[w]] = true;
        });
        std::uint32_t c = 0;
        while (taken[c]) ++c;
        color[v] = c;
    }
    return color;
}

namespace {

enum class Outcome { colorable, not_colorable, budget_exhausted };

// Decides k-colourability by DSATUR backtracking. A vertex may open a new
// colour only as the next unused index, so colour permutations are not
// revisited.
class DsaturSearch {
public:
    DsaturSearch(const UnitGraph& g, std::size_t k, std::uint64_t budget, std::uint64_t& nodes)
        : g_(g),
          n_(g.vertex_count()),
          k_(k),
          budget_(budget),
          nodes_(nodes),
          color_(n_, kNone),
          saturation_(n_, 0),
          neighbor_colors_(n_ * k, 0),
          degree_(n_) {
        for (Vertex v = 0; v < n_; ++v) degree_[v] = g.degree(v);
    }

    Outcome run() {
        const Outcome out = search(0, 0);
        return out;
    }

    const std::vector<std::uint32_t>& coloring() const { return color_; }

private:
    static constexpr auto kNone = static_cast<std::uint32_t>(-1);

    Vertex select() const {
        Vertex best = 0;
        bool found = false;
        for (Vertex v = 0; v < n_; ++v) {
            if (color_[v] != kNone) continue;
            if (!found || saturation_[v] > saturation_[best] ||
                (saturation_[v] == saturation_[best] && degree_[v] > degree_[best])) {
                best = v;
                found = true;
            }
        }
        return best;
    }

    void assign(Vertex v, std::uint32_t c) {
        color_[v] = c;
        g_.neighbors(v).for_each([&](Vertex w) {
            if (neighbor_colors_[w * k_ + c]++ == 0) ++saturation_[w];
        });
    }

    void unassign(Vertex v) {
        const std::uint32_t c = color_[v];
        g_.neighbors(v).for_each([&](Vertex w) {
            if (--neighbor_colors_[w * k_ + c] == 0) --saturation_[w];
        });
        color_[v] = kNone;
    }

    Outcome search(std::size_t colored, std::size_t used) {
        if (colored == n_) return Outcome::colorable;
        if (++nodes_ > budget_ && budget_ != 0) return Outcome::budget_exhausted;
        const Vertex v = select();
        const std::size_t limit = std::min(used + 1, k_);
        for (std::uint32_t c = 0; c < limit; ++c) {
            if (neighbor_colors_[v * k_ + c] != 0) continue;
            assign(v, c);
            const Outcome out = search(colored + 1, std::max<std::size_t>(used, c + 1));
            if (out != Outcome::not_colorable) return out;
            unassign(v);
        }
        return Outcome::not_colorable;
    }

    const UnitGraph& g_;
    std::size_t n_;
    std::size_t k_;
    std::uint64_t budget_;
    std::uint64_t& nodes_;
    std::vector<std::uint32_t> color_;
    std::vector<std::size_t> saturation_;
    std::vector<std::uint32_t> neighbor_colors_;
    std::vector<std::size_t> degree_;
};

}  // namespace

ColoringResult chromatic_number(const UnitGraph& g, const ChromaticOptions& options) {
    ColoringResult out;
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        out.exact = true;
        return out;
    }
    out.coloring = greedy_coloring(g);
    out.upper = *std::max_element(out.coloring.begin(), out.coloring.end()) + 1;
    out.lower = options.known_lower_bound;
    if (out.lower == 0) out.lower = clique_number(g, options.node_budget).size;
    if (out.lower == out.upper || n > options.exact_cap) {
        out.exact = out.lower == out.upper;
        return out;
    }
    std::uint64_t nodes = 0;
    for (std::size_t k = out.lower; k < out.upper; ++k) {
        DsaturSearch search(g, k, options.node_budget, nodes);
        const Outcome outcome = search.run();
        if (outcome == Outcome::budget_exhausted) {
            out.lower = k;
            return out;
        }
        if (outcome == Outcome::colorable) {
            out.lower = out.upper = k;
            out.coloring = search.coloring();
            out.exact = true;
            return out;
        }
    }
    out.lower = out.upper;
    out.exact = true;
    return out;
}

}  // namespace unitgraph
