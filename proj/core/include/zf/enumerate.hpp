#pragma once

#include <vector>

#include "zf/budget.hpp"
#include "zf/graph.hpp"

namespace zf::detail {

/// Incoming-edge lists: for node i, the edges (j, e) with j < i. Node order is
/// ascending index, so the recursion below multiplies each edge exactly once,
/// with the row of the stored matrix always the lower endpoint.
inline std::vector<std::vector<std::pair<int, int>>> incoming_edges(const DecoratedGraph& g) {
    std::vector<std::vector<std::pair<int, int>>> in(g.node_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        in[v].emplace_back(u, e);
    }
    return in;
}

/// Enumerates colorings phi in mixed-radix order (node 0 most significant),
/// maintaining the prefix weight product. Subtrees with a zero prefix are
/// skipped; they contribute nothing to any weighted sum. `fixed[u]` restricts
/// node u to one color (-1 = free). NodeW(u, c) and EdgeW(e, c_lo, c_hi)
/// return the weight factors; Sink(phi, w) receives each nonzero-weight
/// coloring.
template <class NodeW, class EdgeW, class Sink>
void enumerate_weighted(const DecoratedGraph& g, const std::vector<int>& fixed, NodeW&& node_w,
                        EdgeW&& edge_w, Sink&& sink) {
    const int n = g.node_count();
    const int K = g.color_count();
    const auto incoming = incoming_edges(g);

    std::vector<int> phi(n, 0);
    std::vector<Rat> prefix(n + 1);
    prefix[0] = 1;

    // Explicit recursion; depth is at most n.
    struct Frame {
        int next_color;
    };
    std::vector<Frame> stack(static_cast<std::size_t>(n) + 1);
    int depth = 0;
    stack[0].next_color = 0;

    while (depth >= 0) {
        if (depth == n) {
            sink(static_cast<const std::vector<int>&>(phi), prefix[n]);
            --depth;
            continue;
        }
        int c = stack[depth].next_color;
        bool descended = false;
        while (c < K) {
            if (fixed[depth] >= 0 && c != fixed[depth]) {
                ++c;
                continue;
            }
            Rat& w = prefix[depth + 1];
            w = prefix[depth];
            w *= node_w(depth, c);
            if (sgn(w) != 0) {
                for (const auto& [j, e] : incoming[depth]) {
                    w *= edge_w(e, phi[j], c);
                    if (sgn(w) == 0) break;
                }
            }
            if (sgn(w) != 0) {
                phi[depth] = c;
                stack[depth].next_color = c + 1;
                ++depth;
                stack[depth].next_color = 0;
                descended = true;
                break;
            }
            ++c;
        }
        if (!descended) --depth;
    }
}

/// Budget guard for a K^f enumeration over f free nodes.
inline void check_enumeration_budget(const DecoratedGraph& g, const std::vector<int>& fixed,
                                     const Budget& budget, const char* what) {
    int free_nodes = 0;
    for (int v : fixed)
        if (v < 0) ++free_nodes;
    budget.check_colorings(g.color_count(), free_nodes, what);
}

inline std::vector<int> fixed_from_assignment(const DecoratedGraph& g,
                                              const ColorAssignment& assign) {
    std::vector<int> fixed(g.node_count(), -1);
    for (const auto& [node, color] : assign.entries()) {
        if (node < 0 || node >= g.node_count())
            throw ConfigError("assigned node not in graph");
        if (color < 0 || color >= g.color_count())
            throw ConfigError("assigned color out of range");
        fixed[node] = color;
    }
    return fixed;
}

}  // namespace zf::detail
