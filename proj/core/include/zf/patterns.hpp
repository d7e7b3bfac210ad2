#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zf/budget.hpp"
#include "zf/models.hpp"
#include "zf/rational.hpp"

namespace zf {

/// Small undirected graph with a canonical form for isomorphism-class
/// identity. Canonical labeling is exhaustive permutation minimization, which
/// is fine at <= 8 nodes.
class PatternGraph {
public:
    static constexpr int max_nodes = 8;

    PatternGraph(int n, const std::vector<std::pair<int, int>>& edges);
    static PatternGraph induced(const GraphStructure& h, const std::vector<int>& nodes);
    static PatternGraph single_node() { return PatternGraph(1, {}); }
    static PatternGraph edgeless(int n) { return PatternGraph(n, {}); }

    int node_count() const { return n_; }
    int edge_count() const;
    bool has_edge(int i, int j) const;
    std::vector<std::pair<int, int>> edges() const;
    bool connected() const;

    /// Stable identity of the isomorphism class.
    std::uint32_t canonical_bits() const { return canon_; }
    std::string canonical_key() const;

    bool isomorphic_to(const PatternGraph& o) const {
        return n_ == o.n_ && canon_ == o.canon_;
    }

private:
    int n_;
    std::uint64_t adj_;   // bit (i*8+j), both directions
    std::uint32_t canon_; // minimized upper-triangle bits
};

/// All isomorphism classes of graphs on exactly n nodes (cached; n <= 6).
const std::vector<PatternGraph>& all_canonical_graphs(int n);

/// Ind(F, H): number of node subsets of H whose induced subgraph is
/// isomorphic to F. Plain graph-theoretic version (uniform decorations).
Int ind_count(const PatternGraph& f, const GraphStructure& h);

/// Enumerates every connected induced subgraph on <= size_max nodes exactly
/// once ("extend by neighbors with exclusion set"); emits sorted node lists.
void connected_induced_subgraphs(const GraphStructure& h, int size_max,
                                 const std::function<void(const std::vector<int>&)>& emit);

/// Convenience: counts of connected induced subgraphs per size 1..size_max.
std::vector<Int> connected_subgraph_counts(const GraphStructure& h, int size_max);

/// Counts of connected induced subgraphs per isomorphism class (canonical key).
std::map<std::string, Int> connected_subgraph_census(const GraphStructure& h, int size_max);

/// For connected F: Ind(F, h1 + h2) = Ind(F, h1) + Ind(F, h2). Rejects
/// disconnected patterns, for which the identity is not claimed.
bool ind_sum_additivity_check(const PatternGraph& f, const GraphStructure& h1,
                              const GraphStructure& h2);

/// Product-of-embedding-counts decomposition: multipliers alpha with
///   prod_l Ind(f_l, h) = sum_F alpha(F) Ind(F, h),
/// where alpha(F) counts ordered tuples of induced embeddings of the f_l into
/// F that jointly cover V(F). alpha depends only on the factor list; the
/// identity is verified on the supplied host before returning.
struct DecompositionTerm {
    PatternGraph pattern;
    Int alpha;
};
std::vector<DecompositionTerm> ind_product_decompose(const std::vector<PatternGraph>& f_list,
                                                     const GraphStructure& h);

/// Coefficients beta_{H,k} of the hard-core power-sum representation
///   Roots(Z(G(z)), k) = sum_H beta_{H,k} Ind(H, G)
/// assembled from the Girard composition sum over independent-set pattern
/// counts. Every disconnected pattern's coefficient vanishes (asserted in the
/// tests as a theorem, not assumed).
struct BetaTable {
    int k = 0;
    Rat lambda;
    struct Entry {
        PatternGraph pattern;
        Rat beta;
    };
    std::vector<Entry> entries;  // all patterns on <= k nodes
};
BetaTable beta_table_type1(int k, const Rat& lambda);

/// sum_H beta_{H,k} Ind(H, g) evaluated by direct subset counting.
Rat beta_representation_value(const BetaTable& table, const GraphStructure& g);

/// Power sums r_1..r_k of the hard-core (lambda = 1) interpolation polynomial
/// computed purely from connected-subgraph counts via the beta tables; the
/// polynomial-time route that bypasses independent-set enumeration. k <= 4.
std::vector<Rat> hardcore_power_sums_via_connected(const GraphStructure& g, int k,
                                                   const Budget& budget = {});

}  // namespace zf
