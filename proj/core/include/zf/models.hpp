#pragma once

#include <variant>
#include <vector>

#include "zf/graph.hpp"
#include "zf/rng.hpp"

namespace zf {

/// Bare graph structure (no decoration): input to the model builders.
struct GraphStructure {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // canonical orientation u < v
};

// Standard test graphs.
GraphStructure path_graph(int n);
GraphStructure cycle_graph(int n);
GraphStructure complete_graph(int n);
GraphStructure grid_graph(int w, int h);
/// Tree where the root has `d` children and every other internal node has
/// d-1 children; `depth` levels below the root. Node 0 is the root.
GraphStructure regular_tree(int d, int depth);
GraphStructure edgeless_graph(int n);
/// Seeded G(n, p) with rational edge probability; for property tests.
GraphStructure erdos_renyi(int n, const Rat& p, Rng& rng);

/// Model parameter records.
struct HardcoreSpec {
    Rat lambda;
};
struct ProperColoringSpec {
    int K = 0;
};
struct ListColoringSpec {
    int K = 0;
    std::vector<std::vector<int>> lists;  // per node, colors in [0, K)
};
struct IsingSpec {
    Rat h_factor;  // plays e^h
    Rat b;         // plays e^beta; edge matrix is [[b, 1/b], [1/b, b]]
};
using ModelSpec = std::variant<HardcoreSpec, ProperColoringSpec, ListColoringSpec, IsingSpec>;

/// Hard-core model: K = 2, color 0 = unoccupied, color 1 = occupied,
/// a^u = (1, lambda), A = [[1,1],[1,0]]. Z(G) = sum_I lambda^|I| over
/// independent sets.
DecoratedGraph build_hardcore(const GraphStructure& gs, const Rat& lambda);

/// Proper K-coloring: a = ones, A_ij = 1(i != j). Z = #proper colorings.
DecoratedGraph build_proper_coloring(const GraphStructure& gs, int K);

/// Proper list-coloring: a = ones, A^(u,v)_ij = 1(i != j, i in C(u), j in C(v)).
/// List membership is enforced only through edge matrices, so an isolated node
/// contributes a factor K (not |C(u)|) to Z.
DecoratedGraph build_list_coloring(const GraphStructure& gs, const ListColoringSpec& spec);

/// Ising model in exponentiated parameters: a = (1, h_factor),
/// A = [[b, 1/b], [1/b, b]] with b > 0. Entering rational (e^h, e^beta)
/// directly keeps the algebra exact.
DecoratedGraph build_ising(const GraphStructure& gs, const Rat& h_factor, const Rat& b);

DecoratedGraph build_model(const GraphStructure& gs, const ModelSpec& spec);

/// Hard-core uniqueness threshold lambda_c(d) = (d-1)^(d-1) / (d-2)^d, d >= 3.
Rat lambda_c(int d);

/// Hard-core reduction by graph surgery: deletes nodes pinned unoccupied and
/// closed neighborhoods of nodes pinned occupied. Returns the surviving
/// structure and the count of occupied pins, with
/// Z(G_{S,sigma}) = lambda^k * Z(reduced).
struct HardcoreReduction {
    GraphStructure structure;
    std::vector<int> kept_nodes;  // original indices of surviving nodes
    int occupied_pins = 0;
    bool feasible = true;  // false if two occupied pins are adjacent
};
HardcoreReduction hardcore_reduce_structure(const GraphStructure& gs,
                                            const ColorAssignment& assign);

}  // namespace zf
