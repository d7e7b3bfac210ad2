#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zf/errors.hpp"
#include "zf/rational.hpp"

namespace zf {

/// Sorted, duplicate-free set of node indices.
class NodeSet {
public:
    NodeSet() = default;
    explicit NodeSet(std::vector<int> ids);

    static NodeSet single(int u) { return NodeSet({u}); }

    const std::vector<int>& ids() const { return ids_; }
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }
    bool contains(int u) const;

    bool operator==(const NodeSet&) const = default;

private:
    std::vector<int> ids_;
};

/// Partial map node -> color (colors are 0-based, in [0, K)).
class ColorAssignment {
public:
    ColorAssignment() = default;
    ColorAssignment(std::initializer_list<std::pair<const int, int>> init) : entries_(init) {}

    void set(int node, int color);
    bool assigned(int node) const { return entries_.count(node) != 0; }
    int color_of(int node) const { return entries_.at(node); }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    const std::map<int, int>& entries() const { return entries_; }
    NodeSet domain() const;

    /// Union of two assignments. Throws ConfigError("conflicting assignment")
    /// if the same node carries two different colors.
    static ColorAssignment merged(const ColorAssignment& a, const ColorAssignment& b);

    bool operator==(const ColorAssignment&) const = default;

private:
    std::map<int, int> entries_;
};

/// K x K matrix of exact rationals. Stored once per undirected edge with the
/// convention that the row index is the color of the lower-indexed endpoint;
/// reading against the stored orientation transposes, so
/// A^(u,v)_{ij} = A^(v,u)_{ji} holds structurally.
class EdgeMatrix {
public:
    EdgeMatrix() : K_(0) {}
    EdgeMatrix(int K, Rat fill) : K_(K), m_(static_cast<std::size_t>(K) * K, std::move(fill)) {}

    int K() const { return K_; }
    const Rat& at(int i, int j) const { return m_[static_cast<std::size_t>(i) * K_ + j]; }
    Rat& at(int i, int j) { return m_[static_cast<std::size_t>(i) * K_ + j]; }

    EdgeMatrix transposed() const;

    bool operator==(const EdgeMatrix&) const = default;

private:
    int K_;
    std::vector<Rat> m_;
};

/// Finite simple graph with per-node weight vectors and per-edge K x K weight
/// matrices. Immutable after construction; reductions return new graphs.
///
/// `pinned()` records the colors forced by reduce() so far. The decoration
/// alone already encodes the pinning through zeroed edge rows; the record is
/// needed by the hard-core interpolation, whose polynomial factors out the
/// deterministic contribution of pinned nodes.
class DecoratedGraph {
public:
    DecoratedGraph(int n, int K, std::vector<std::pair<int, int>> edges,
                   std::vector<std::vector<Rat>> node_weights,
                   std::vector<EdgeMatrix> edge_weights,
                   ColorAssignment pinned = {});

    int node_count() const { return n_; }
    int color_count() const { return K_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges in canonical orientation (u < v), sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    /// Neighbors of u as (neighbor, edge index) pairs, ascending neighbor.
    const std::vector<std::pair<int, int>>& adjacency(int u) const { return adj_[u]; }
    int degree(int u) const { return static_cast<int>(adj_[u].size()); }
    bool has_edge(int u, int v) const;

    const std::vector<Rat>& node_weights(int u) const { return node_weights_[u]; }
    const Rat& node_weight(int u, int color) const { return node_weights_[u][color]; }

    /// Matrix of edge e in stored orientation (row = lower endpoint's color).
    const EdgeMatrix& edge_matrix(int e) const { return edge_weights_[e]; }

    /// Weight of edge (u,v) when u has color cu and v has color cv; handles
    /// orientation transparently.
    const Rat& edge_weight(int u, int v, int cu, int cv) const;

    const ColorAssignment& pinned() const { return pinned_; }

    /// Total weight of one coloring: prod_u a^u_{phi(u)} * prod_(u,v) A_{phi(u),phi(v)}.
    Rat coloring_weight(const std::vector<int>& phi) const;

private:
    int n_;
    int K_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::vector<Rat>> node_weights_;
    std::vector<EdgeMatrix> edge_weights_;
    ColorAssignment pinned_;
};

/// Self-reduction G -> G_{S,sigma}: node structure and node weights unchanged;
/// every edge incident to an assigned node keeps only the rows (columns)
/// matching the assigned color. Composes: reduce(reduce(g,a),b) equals
/// reduce(g, merged(a,b)).
DecoratedGraph reduce(const DecoratedGraph& g, const ColorAssignment& assign);

/// All nodes at graph distance <= r from s (BFS). s must be nonempty, r >= 0.
NodeSet ball(const DecoratedGraph& g, const NodeSet& s, int r);

/// Nodes at distance exactly r from s, r >= 1. An empty result is a valid
/// value meaning "beyond the eccentricity of s".
NodeSet boundary(const DecoratedGraph& g, const NodeSet& s, int r);

/// Disjoint union; g2's node indices are shifted by g1.node_count().
/// Requires matching color counts.
DecoratedGraph disjoint_union(const DecoratedGraph& g1, const DecoratedGraph& g2);

}  // namespace zf
