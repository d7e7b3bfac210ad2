#include "zf/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

namespace zf {

NodeSet::NodeSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    auto last = std::unique(ids_.begin(), ids_.end());
    if (last != ids_.end()) throw ConfigError("duplicate node in node set");
    if (!ids_.empty() && ids_.front() < 0) throw ConfigError("negative node index");
}

bool NodeSet::contains(int u) const {
    return std::binary_search(ids_.begin(), ids_.end(), u);
}

void ColorAssignment::set(int node, int color) {
    auto it = entries_.find(node);
    if (it != entries_.end() && it->second != color)
        throw ConfigError("conflicting assignment");
    entries_[node] = color;
}

NodeSet ColorAssignment::domain() const {
    std::vector<int> ids;
    ids.reserve(entries_.size());
    for (const auto& [node, color] : entries_) ids.push_back(node);
    return NodeSet(std::move(ids));
}

ColorAssignment ColorAssignment::merged(const ColorAssignment& a, const ColorAssignment& b) {
    ColorAssignment out = a;
    for (const auto& [node, color] : b.entries_) out.set(node, color);
    return out;
}

EdgeMatrix EdgeMatrix::transposed() const {
    EdgeMatrix t(K_, Rat(0));
    for (int i = 0; i < K_; ++i)
        for (int j = 0; j < K_; ++j) t.at(j, i) = at(i, j);
    return t;
}

DecoratedGraph::DecoratedGraph(int n, int K, std::vector<std::pair<int, int>> edges,
                               std::vector<std::vector<Rat>> node_weights,
                               std::vector<EdgeMatrix> edge_weights, ColorAssignment pinned)
    : n_(n),
      K_(K),
      edges_(std::move(edges)),
      node_weights_(std::move(node_weights)),
      edge_weights_(std::move(edge_weights)),
      pinned_(std::move(pinned)) {
    if (n_ < 0) throw ConfigError("negative node count");
    if (K_ < 1) throw ConfigError("color count must be >= 1");
    if (node_weights_.size() != static_cast<std::size_t>(n_))
        throw ConfigError("node weight count does not match node count");
    if (edge_weights_.size() != edges_.size())
        throw ConfigError("edge matrix count does not match edge count");

    for (auto& [u, v] : edges_) {
        if (u == v) throw ConfigError("self-loop not allowed");
        if (u < 0 || v < 0 || u >= n_ || v >= n_) throw ConfigError("edge endpoint out of range");
    }
    // Canonical orientation (u < v) must be established by the caller; matrices
    // are interpreted against it and cannot be silently flipped here.
    for (auto& [u, v] : edges_)
        if (u > v) throw ConfigError("edge not in canonical orientation (u < v)");

    std::vector<std::pair<int, int>> sorted = edges_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ConfigError("duplicate edge");

    // Weights are normalized on entry; every exact-equality path downstream
    // assumes canonical rationals.
    for (int u = 0; u < n_; ++u) {
        if (node_weights_[u].size() != static_cast<std::size_t>(K_))
            throw ConfigError("node weight vector has wrong length");
        for (Rat& w : node_weights_[u]) {
            w.canonicalize();
            if (w < 0) throw ConfigError("negative node weight");
        }
    }
    for (EdgeMatrix& m : edge_weights_) {
        if (m.K() != K_) throw ConfigError("edge matrix has wrong dimension");
        for (int i = 0; i < K_; ++i)
            for (int j = 0; j < K_; ++j) {
                m.at(i, j).canonicalize();
                if (m.at(i, j) < 0) throw ConfigError("negative edge weight");
            }
    }
    for (const auto& [node, color] : pinned_.entries()) {
        if (node < 0 || node >= n_) throw ConfigError("pinned node out of range");
        if (color < 0 || color >= K_) throw ConfigError("pinned color out of range");
    }

    adj_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].emplace_back(v, e);
        adj_[v].emplace_back(u, e);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool DecoratedGraph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const auto& [w, e] : adj_[u])
        if (w == v) return true;
    return false;
}

const Rat& DecoratedGraph::edge_weight(int u, int v, int cu, int cv) const {
    int lo = u, hi = v, clo = cu, chi = cv;
    if (lo > hi) {
        std::swap(lo, hi);
        std::swap(clo, chi);
    }
    for (const auto& [w, e] : adj_[lo])
        if (w == hi) return edge_weights_[e].at(clo, chi);
    throw ConfigError("no such edge");
}

Rat DecoratedGraph::coloring_weight(const std::vector<int>& phi) const {
    Rat w(1);
    for (int u = 0; u < n_; ++u) w *= node_weights_[u][phi[u]];
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        w *= edge_weights_[e].at(phi[u], phi[v]);
    }
    return w;
}

DecoratedGraph reduce(const DecoratedGraph& g, const ColorAssignment& assign) {
    const int K = g.color_count();
    for (const auto& [node, color] : assign.entries()) {
        if (node < 0 || node >= g.node_count()) throw ConfigError("assigned node not in graph");
        if (color < 0 || color >= K) throw ConfigError("assigned color out of range");
    }

    std::vector<EdgeMatrix> mats;
    mats.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        EdgeMatrix m = g.edge_matrix(e);
        if (assign.assigned(u)) {
            int cu = assign.color_of(u);
            for (int i = 0; i < K; ++i)
                if (i != cu)
                    for (int j = 0; j < K; ++j) m.at(i, j) = 0;
        }
        if (assign.assigned(v)) {
            int cv = assign.color_of(v);
            for (int j = 0; j < K; ++j)
                if (j != cv)
                    for (int i = 0; i < K; ++i) m.at(i, j) = 0;
        }
        mats.push_back(std::move(m));
    }

    std::vector<std::vector<Rat>> node_w;
    node_w.reserve(g.node_count());
    for (int u = 0; u < g.node_count(); ++u) node_w.push_back(g.node_weights(u));

    ColorAssignment pinned = ColorAssignment::merged(g.pinned(), assign);
    return DecoratedGraph(g.node_count(), K, g.edges(), std::move(node_w), std::move(mats),
                          std::move(pinned));
}

NodeSet ball(const DecoratedGraph& g, const NodeSet& s, int r) {
    if (s.empty()) throw ConfigError("ball: source set is empty");
    if (r < 0) throw ConfigError("ball: radius must be >= 0");
    std::vector<int> dist(g.node_count(), -1);
    std::deque<int> queue;
    for (int u : s.ids()) {
        if (u >= g.node_count()) throw ConfigError("ball: node out of range");
        dist[u] = 0;
        queue.push_back(u);
    }
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        if (dist[u] == r) continue;
        for (const auto& [v, e] : g.adjacency(u)) {
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    std::vector<int> ids;
    for (int u = 0; u < g.node_count(); ++u)
        if (dist[u] >= 0) ids.push_back(u);
    return NodeSet(std::move(ids));
}

NodeSet boundary(const DecoratedGraph& g, const NodeSet& s, int r) {
    if (r < 1) throw ConfigError("boundary: radius must be >= 1");
    NodeSet outer = ball(g, s, r);
    NodeSet inner = ball(g, s, r - 1);
    std::vector<int> ids;
    for (int u : outer.ids())
        if (!inner.contains(u)) ids.push_back(u);
    return NodeSet(std::move(ids));
}

DecoratedGraph disjoint_union(const DecoratedGraph& g1, const DecoratedGraph& g2) {
    if (g1.color_count() != g2.color_count())
        throw ConfigError("disjoint_union: color counts differ");
    const int shift = g1.node_count();

    std::vector<std::pair<int, int>> edges = g1.edges();
    for (auto [u, v] : g2.edges()) edges.emplace_back(u + shift, v + shift);

    std::vector<std::vector<Rat>> node_w;
    node_w.reserve(g1.node_count() + g2.node_count());
    for (int u = 0; u < g1.node_count(); ++u) node_w.push_back(g1.node_weights(u));
    for (int u = 0; u < g2.node_count(); ++u) node_w.push_back(g2.node_weights(u));

    std::vector<EdgeMatrix> mats;
    mats.reserve(edges.size());
    for (int e = 0; e < g1.edge_count(); ++e) mats.push_back(g1.edge_matrix(e));
    for (int e = 0; e < g2.edge_count(); ++e) mats.push_back(g2.edge_matrix(e));

    ColorAssignment pinned = g1.pinned();
    for (const auto& [node, color] : g2.pinned().entries()) pinned.set(node + shift, color);

    return DecoratedGraph(g1.node_count() + g2.node_count(), g1.color_count(), std::move(edges),
                          std::move(node_w), std::move(mats), std::move(pinned));
}

}  // namespace zf
