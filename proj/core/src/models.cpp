#include "zf/models.hpp"

#include <algorithm>
#include <set>

namespace zf {

namespace {

DecoratedGraph with_uniform_decoration(const GraphStructure& gs, std::vector<Rat> node_weight,
                                       const EdgeMatrix& mat) {
    std::vector<std::vector<Rat>> node_w(gs.n, node_weight);
    std::vector<EdgeMatrix> mats(gs.edges.size(), mat);
    return DecoratedGraph(gs.n, static_cast<int>(node_weight.size()), gs.edges, std::move(node_w),
                          std::move(mats));
}

}  // namespace

GraphStructure path_graph(int n) {
    if (n < 1) throw ConfigError("path: n must be >= 1");
    GraphStructure g{n, {}};
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

GraphStructure cycle_graph(int n) {
    if (n < 3) throw ConfigError("cycle: n must be >= 3");
    GraphStructure g{n, {}};
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    g.edges.emplace_back(0, n - 1);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

GraphStructure complete_graph(int n) {
    if (n < 1) throw ConfigError("complete: n must be >= 1");
    GraphStructure g{n, {}};
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

GraphStructure grid_graph(int w, int h) {
    if (w < 1 || h < 1) throw ConfigError("grid: dimensions must be >= 1");
    GraphStructure g{w * h, {}};
    auto id = [w](int x, int y) { return y * w + x; };
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            if (x + 1 < w) g.edges.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < h) g.edges.emplace_back(id(x, y), id(x, y + 1));
        }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

GraphStructure regular_tree(int d, int depth) {
    if (d < 2) throw ConfigError("regular_tree: degree must be >= 2");
    if (depth < 0) throw ConfigError("regular_tree: depth must be >= 0");
    GraphStructure g{1, {}};
    std::vector<int> frontier{0};
    for (int level = 0; level < depth; ++level) {
        std::vector<int> next;
        for (int u : frontier) {
            int children = (level == 0) ? d : d - 1;
            for (int c = 0; c < children; ++c) {
                int v = g.n++;
                g.edges.emplace_back(u, v);
                next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

GraphStructure edgeless_graph(int n) {
    if (n < 0) throw ConfigError("edgeless: n must be >= 0");
    return GraphStructure{n, {}};
}

GraphStructure erdos_renyi(int n, const Rat& p, Rng& rng) {
    if (n < 0) throw ConfigError("erdos_renyi: n must be >= 0");
    if (p < 0 || p > 1) throw ConfigError("erdos_renyi: p must be in [0,1]");
    GraphStructure g{n, {}};
    // Accept edge iff r < p with r uniform over a 2^32 grid; exact enough for tests.
    const std::uint64_t grid = std::uint64_t{1} << 32;
    Rat threshold = p * Rat(static_cast<unsigned long>(grid));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (Rat(static_cast<unsigned long>(rng.below(grid))) < threshold)
                g.edges.emplace_back(u, v);
    return g;
}

DecoratedGraph build_hardcore(const GraphStructure& gs, const Rat& lambda) {
    if (lambda < 0) throw ConfigError("hardcore: lambda must be >= 0");
    EdgeMatrix mat(2, Rat(1));
    mat.at(1, 1) = 0;
    return with_uniform_decoration(gs, {Rat(1), lambda}, mat);
}

DecoratedGraph build_proper_coloring(const GraphStructure& gs, int K) {
    if (K < 1) throw ConfigError("proper_coloring: K must be >= 1");
    EdgeMatrix mat(K, Rat(1));
    for (int i = 0; i < K; ++i) mat.at(i, i) = 0;
    return with_uniform_decoration(gs, std::vector<Rat>(K, Rat(1)), mat);
}

DecoratedGraph build_list_coloring(const GraphStructure& gs, const ListColoringSpec& spec) {
    if (spec.K < 1) throw ConfigError("list_coloring: K must be >= 1");
    if (spec.lists.size() != static_cast<std::size_t>(gs.n))
        throw ConfigError("list_coloring: one list per node required");
    std::vector<std::set<int>> lists(gs.n);
    for (int u = 0; u < gs.n; ++u)
        for (int c : spec.lists[u]) {
            if (c < 0 || c >= spec.K) throw ConfigError("list_coloring: color out of range");
            lists[u].insert(c);
        }

    std::vector<std::vector<Rat>> node_w(gs.n, std::vector<Rat>(spec.K, Rat(1)));
    std::vector<EdgeMatrix> mats;
    mats.reserve(gs.edges.size());
    for (auto [u, v] : gs.edges) {
        EdgeMatrix m(spec.K, Rat(0));
        for (int i : lists[u])
            for (int j : lists[v])
                if (i != j) m.at(i, j) = 1;
        mats.push_back(std::move(m));
    }
    return DecoratedGraph(gs.n, spec.K, gs.edges, std::move(node_w), std::move(mats));
}

DecoratedGraph build_ising(const GraphStructure& gs, const Rat& h_factor, const Rat& b) {
    if (b <= 0) throw ConfigError("ising: b must be > 0");
    if (h_factor < 0) throw ConfigError("ising: h_factor must be >= 0");
    EdgeMatrix mat(2, Rat(1) / b);
    mat.at(0, 0) = b;
    mat.at(1, 1) = b;
    return with_uniform_decoration(gs, {Rat(1), h_factor}, mat);
}

DecoratedGraph build_model(const GraphStructure& gs, const ModelSpec& spec) {
    return std::visit(
        [&](const auto& s) -> DecoratedGraph {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, HardcoreSpec>)
                return build_hardcore(gs, s.lambda);
            else if constexpr (std::is_same_v<T, ProperColoringSpec>)
                return build_proper_coloring(gs, s.K);
            else if constexpr (std::is_same_v<T, ListColoringSpec>)
                return build_list_coloring(gs, s);
            else
                return build_ising(gs, s.h_factor, s.b);
        },
        spec);
}

Rat lambda_c(int d) {
    if (d < 3) throw ConfigError("lambda_c: d must be >= 3");
    Rat num = rat_pow(Rat(d - 1), static_cast<unsigned long>(d - 1));
    Rat den = rat_pow(Rat(d - 2), static_cast<unsigned long>(d));
    return num / den;
}

HardcoreReduction hardcore_reduce_structure(const GraphStructure& gs,
                                            const ColorAssignment& assign) {
    HardcoreReduction out;
    std::vector<bool> deleted(gs.n, false);
    std::vector<std::vector<int>> adj(gs.n);
    for (auto [u, v] : gs.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (const auto& [node, color] : assign.entries()) {
        if (node < 0 || node >= gs.n) throw ConfigError("assigned node not in graph");
        if (color == 0) {
            deleted[node] = true;
        } else if (color == 1) {
            ++out.occupied_pins;
            deleted[node] = true;
            for (int v : adj[node]) {
                if (assign.assigned(v) && assign.color_of(v) == 1) out.feasible = false;
                deleted[v] = true;
            }
        } else {
            throw ConfigError("hardcore reduction: color out of range");
        }
    }
    std::vector<int> new_id(gs.n, -1);
    for (int u = 0; u < gs.n; ++u) {
        if (!deleted[u]) {
            new_id[u] = out.structure.n++;
            out.kept_nodes.push_back(u);
        }
    }
    for (auto [u, v] : gs.edges)
        if (!deleted[u] && !deleted[v]) out.structure.edges.emplace_back(new_id[u], new_id[v]);
    return out;
}

}  // namespace zf
