#include "zf/patterns.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "zf/errors.hpp"

namespace zf {

namespace {

std::uint32_t upper_bits(int n, const std::function<bool(int, int)>& has_edge) {
    std::uint32_t bits = 0;
    int pos = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++pos)
            if (has_edge(i, j)) bits |= std::uint32_t{1} << pos;
    return bits;
}

const std::vector<std::vector<std::array<int, 8>>>& permutation_tables() {
    static const std::vector<std::vector<std::array<int, 8>>> tables = [] {
        std::vector<std::vector<std::array<int, 8>>> t(PatternGraph::max_nodes + 1);
        for (int n = 1; n <= PatternGraph::max_nodes; ++n) {
            std::array<int, 8> perm{};
            std::iota(perm.begin(), perm.begin() + n, 0);
            do {
                t[static_cast<std::size_t>(n)].push_back(perm);
            } while (std::next_permutation(perm.begin(), perm.begin() + n));
        }
        return t;
    }();
    return tables;
}

std::uint32_t canonicalize(int n, std::uint64_t adj) {
    if (n <= 1) return 0;
    auto edge = [&](int i, int j) { return (adj >> (i * 8 + j)) & 1; };
    std::uint32_t best = ~std::uint32_t{0};
    for (const auto& perm : permutation_tables()[static_cast<std::size_t>(n)]) {
        std::uint32_t bits = 0;
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pos)
                if (edge(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]))
                    bits |= std::uint32_t{1} << pos;
        if (bits < best) best = bits;
    }
    return best;
}

}  // namespace

PatternGraph::PatternGraph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n), adj_(0) {
    if (n < 1 || n > max_nodes) throw BudgetError("pattern too large");
    for (auto [u, v] : edges) {
        if (u == v || u < 0 || v < 0 || u >= n || v >= n)
            throw ConfigError("pattern edge out of range");
        adj_ |= std::uint64_t{1} << (u * 8 + v);
        adj_ |= std::uint64_t{1} << (v * 8 + u);
    }
    canon_ = canonicalize(n_, adj_);
}

PatternGraph PatternGraph::induced(const GraphStructure& h, const std::vector<int>& nodes) {
    const int n = static_cast<int>(nodes.size());
    if (n < 1 || n > max_nodes) throw BudgetError("pattern too large");
    std::vector<std::pair<int, int>> edges;
    auto has = [&](int a, int b) {
        for (auto [u, v] : h.edges)
            if ((u == a && v == b) || (u == b && v == a)) return true;
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (has(nodes[static_cast<std::size_t>(i)], nodes[static_cast<std::size_t>(j)]))
                edges.emplace_back(i, j);
    return PatternGraph(n, edges);
}

int PatternGraph::edge_count() const {
    int count = 0;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) ++count;
    return count;
}

bool PatternGraph::has_edge(int i, int j) const {
    return (adj_ >> (i * 8 + j)) & 1;
}

std::vector<std::pair<int, int>> PatternGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(i, j)) out.emplace_back(i, j);
    return out;
}

bool PatternGraph::connected() const {
    std::uint32_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < n_; ++v) {
            if (has_edge(u, v) && !(seen & (std::uint32_t{1} << v))) {
                seen |= std::uint32_t{1} << v;
                stack.push_back(v);
            }
        }
    }
    return seen == (std::uint32_t{1} << n_) - 1;
}

std::string PatternGraph::canonical_key() const {
    std::ostringstream os;
    os << n_ << ":" << std::hex << canon_;
    return os.str();
}

const std::vector<PatternGraph>& all_canonical_graphs(int n) {
    static std::vector<std::vector<PatternGraph>> cache(7);
    if (n < 1 || n > 6) throw BudgetError("all_canonical_graphs: n out of supported range");
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot.empty()) return slot;

    const int pairs = n * (n - 1) / 2;
    std::map<std::uint32_t, PatternGraph> seen;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        std::vector<std::pair<int, int>> edges;
        int pos = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++pos)
                if ((mask >> pos) & 1) edges.emplace_back(i, j);
        PatternGraph p(n, edges);
        seen.emplace(p.canonical_bits(), p);
    }
    for (auto& [bits, p] : seen) slot.push_back(p);
    return slot;
}

Int ind_count(const PatternGraph& f, const GraphStructure& h) {
    const int k = f.node_count();
    if (k > h.n) return 0;
    Int count(0);
    std::vector<int> pick(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int idx, int next) -> void {
        if (idx == k) {
            if (PatternGraph::induced(h, pick).isomorphic_to(f)) count += 1;
            return;
        }
        for (int u = next; u <= h.n - (k - idx); ++u) {
            pick[static_cast<std::size_t>(idx)] = u;
            self(self, idx + 1, u + 1);
        }
    };
    rec(rec, 0, 0);
    return count;
}

void connected_induced_subgraphs(const GraphStructure& h, int size_max,
                                 const std::function<void(const std::vector<int>&)>& emit) {
    if (size_max < 1) return;
    Budget budget;
    std::int64_t emitted = 0;
    auto guarded = [&](const std::vector<int>& nodes) {
        if (++emitted > budget.max_states)
            throw BudgetError("connected_induced_subgraphs: budget exceeded");
        emit(nodes);
    };
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(h.n));
    for (auto [u, v] : h.edges) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<int> sub;
    std::vector<char> in_sub(static_cast<std::size_t>(h.n), 0);
    std::vector<char> blocked(static_cast<std::size_t>(h.n), 0);

    // ESU-style recursion rooted at v: extend with exclusive neighbors above v.
    auto rec = [&](auto&& self, int root, std::vector<int> ext) -> void {
        std::vector<int> sorted = sub;
        std::sort(sorted.begin(), sorted.end());
        guarded(sorted);
        if (static_cast<int>(sub.size()) == size_max) return;
        while (!ext.empty()) {
            int w = ext.back();
            ext.pop_back();
            std::vector<int> next_ext = ext;
            std::vector<int> newly;
            for (int u : adj[static_cast<std::size_t>(w)]) {
                if (u > root && !in_sub[static_cast<std::size_t>(u)] &&
                    !blocked[static_cast<std::size_t>(u)]) {
                    next_ext.push_back(u);
                    newly.push_back(u);
                    blocked[static_cast<std::size_t>(u)] = 1;
                }
            }
            sub.push_back(w);
            in_sub[static_cast<std::size_t>(w)] = 1;
            self(self, root, std::move(next_ext));
            in_sub[static_cast<std::size_t>(w)] = 0;
            sub.pop_back();
            for (int u : newly) blocked[static_cast<std::size_t>(u)] = 0;
        }
    };

    for (int v = 0; v < h.n; ++v) {
        sub.assign(1, v);
        in_sub[static_cast<std::size_t>(v)] = 1;
        std::fill(blocked.begin(), blocked.end(), 0);
        std::vector<int> ext;
        for (int u : adj[static_cast<std::size_t>(v)])
            if (u > v) {
                ext.push_back(u);
                blocked[static_cast<std::size_t>(u)] = 1;
            }
        rec(rec, v, std::move(ext));
        in_sub[static_cast<std::size_t>(v)] = 0;
    }
}

std::vector<Int> connected_subgraph_counts(const GraphStructure& h, int size_max) {
    std::vector<Int> counts(static_cast<std::size_t>(size_max) + 1, Int(0));
    connected_induced_subgraphs(h, size_max, [&](const std::vector<int>& nodes) {
        counts[nodes.size()] += 1;
    });
    return counts;
}

std::map<std::string, Int> connected_subgraph_census(const GraphStructure& h, int size_max) {
    std::map<std::string, Int> census;
    connected_induced_subgraphs(h, size_max, [&](const std::vector<int>& nodes) {
        census[PatternGraph::induced(h, nodes).canonical_key()] += 1;
    });
    return census;
}

bool ind_sum_additivity_check(const PatternGraph& f, const GraphStructure& h1,
                              const GraphStructure& h2) {
    if (!f.connected())
        throw ConfigError("ind_sum_additivity_check: pattern must be connected");
    GraphStructure u{h1.n + h2.n, h1.edges};
    for (auto [a, b] : h2.edges) u.edges.emplace_back(a + h1.n, b + h1.n);
    std::sort(u.edges.begin(), u.edges.end());
    return ind_count(f, u) == ind_count(f, h1) + ind_count(f, h2);
}

namespace {

/// Number of ordered tuples of node subsets of F, one per entry of `mask_lists`,
/// whose union covers all of V(F).
Int covering_tuples(int n, const std::vector<std::vector<std::uint32_t>>& mask_lists) {
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    std::map<std::uint32_t, Int> ways{{0, Int(1)}};
    for (const auto& list : mask_lists) {
        std::map<std::uint32_t, Int> next;
        for (const auto& [mask, count] : ways)
            for (std::uint32_t s : list) next[mask | s] += count;
        ways = std::move(next);
        if (ways.empty()) return 0;
    }
    auto it = ways.find(full);
    return it == ways.end() ? Int(0) : it->second;
}

/// Node subsets of F inducing a subgraph isomorphic to f, as bitmasks.
std::vector<std::uint32_t> embedding_masks(const PatternGraph& F, const PatternGraph& f) {
    std::vector<std::uint32_t> out;
    const int n = F.node_count();
    const int k = f.node_count();
    if (k > n) return out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> nodes;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) nodes.push_back(i);
        std::vector<std::pair<int, int>> edges;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (F.has_edge(nodes[static_cast<std::size_t>(a)],
                               nodes[static_cast<std::size_t>(b)]))
                    edges.emplace_back(a, b);
        if (PatternGraph(k, edges).isomorphic_to(f)) out.push_back(mask);
    }
    return out;
}

/// Independent node subsets of F of a given size, as bitmasks.
std::vector<std::uint32_t> independent_masks(const PatternGraph& F, int size) {
    std::vector<std::uint32_t> out;
    const int n = F.node_count();
    if (size > n) return out;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
        if (__builtin_popcount(mask) != size) continue;
        bool independent = true;
        for (int a = 0; a < n && independent; ++a)
            for (int b = a + 1; b < n && independent; ++b)
                if (((mask >> a) & 1) && ((mask >> b) & 1) && F.has_edge(a, b))
                    independent = false;
        if (independent) out.push_back(mask);
    }
    return out;
}

template <class Fn>
void for_each_composition(int k, Fn&& fn) {
    // m_1 + 2 m_2 + ... + k m_k = k, all m_i >= 0.
    std::vector<int> mult(static_cast<std::size_t>(k) + 1, 0);
    auto rec = [&](auto&& self, int i, int remaining) -> void {
        if (i == 0) {
            if (remaining == 0) fn(static_cast<const std::vector<int>&>(mult));
            return;
        }
        for (int mi = 0; mi * i <= remaining; ++mi) {
            mult[static_cast<std::size_t>(i)] = mi;
            self(self, i - 1, remaining - mi * i);
        }
        mult[static_cast<std::size_t>(i)] = 0;
    };
    rec(rec, k, k);
}

}  // namespace

std::vector<DecompositionTerm> ind_product_decompose(const std::vector<PatternGraph>& f_list,
                                                     const GraphStructure& h) {
    if (f_list.empty()) throw ConfigError("ind_product_decompose: empty factor list");
    int total = 0;
    for (const auto& f : f_list) total += f.node_count();
    if (total > 6) throw BudgetError("ind_product_decompose: pattern budget exceeded");

    std::vector<DecompositionTerm> terms;
    for (int n = 1; n <= total; ++n) {
        for (const PatternGraph& F : all_canonical_graphs(n)) {
            std::vector<std::vector<std::uint32_t>> lists;
            lists.reserve(f_list.size());
            for (const auto& f : f_list) lists.push_back(embedding_masks(F, f));
            Int alpha = covering_tuples(n, lists);
            if (sgn(alpha) != 0) terms.push_back({F, alpha});
        }
    }

    // The multipliers depend on the factor list alone; the identity must hold
    // on the host we were given.
    Int lhs(1);
    for (const auto& f : f_list) lhs *= ind_count(f, h);
    Int rhs(0);
    for (const auto& term : terms) rhs += term.alpha * ind_count(term.pattern, h);
    if (lhs != rhs)
        throw Error("ind_product_decompose: decomposition identity failed on host");
    return terms;
}

BetaTable beta_table_type1(int k, const Rat& lambda) {
    if (k < 1 || k > 4) throw BudgetError("beta_table_type1: k must be in 1..4");
    BetaTable table;
    table.k = k;
    table.lambda = lambda;

    std::vector<BetaTable::Entry> entries;
    for (int n = 1; n <= k; ++n)
        for (const PatternGraph& p : all_canonical_graphs(n)) entries.push_back({p, Rat(0)});

    for_each_composition(k, [&](const std::vector<int>& mult) {
        long total = 0;
        for (int j = 1; j <= k; ++j) total += mult[static_cast<std::size_t>(j)];
        if (total == 0) return;
        // Girard coefficient of prod_j (i_j lambda^j)^(m_j) in Roots(p, k).
        Int den(1);
        for (int j = 1; j <= k; ++j)
            if (mult[static_cast<std::size_t>(j)] > 0)
                den *= factorial(static_cast<unsigned long>(mult[static_cast<std::size_t>(j)]));
        Rat gamma = Rat(k) * Rat(factorial(static_cast<unsigned long>(total - 1))) / Rat(den);
        if (total % 2 != 0) gamma = -gamma;

        std::vector<int> sizes;
        for (int j = 1; j <= k; ++j)
            for (int c = 0; c < mult[static_cast<std::size_t>(j)]; ++c) sizes.push_back(j);

        for (auto& entry : entries) {
            std::vector<std::vector<std::uint32_t>> lists;
            lists.reserve(sizes.size());
            for (int s : sizes) lists.push_back(independent_masks(entry.pattern, s));
            Int n_tuples = covering_tuples(entry.pattern.node_count(), lists);
            if (sgn(n_tuples) != 0) entry.beta += gamma * Rat(n_tuples);
        }
    });

    Rat lambda_k = rat_pow(lambda, static_cast<unsigned long>(k));
    for (auto& entry : entries) entry.beta *= lambda_k;
    table.entries = std::move(entries);
    return table;
}

Rat beta_representation_value(const BetaTable& table, const GraphStructure& g) {
    Rat acc(0);
    for (const auto& entry : table.entries) {
        if (sgn(entry.beta) == 0) continue;
        acc += entry.beta * Rat(ind_count(entry.pattern, g));
    }
    return acc;
}

std::vector<Rat> hardcore_power_sums_via_connected(const GraphStructure& g, int k,
                                                   const Budget& budget) {
    (void)budget;
    if (k < 1 || k > 4) throw BudgetError("hardcore_power_sums_via_connected: k must be in 1..4");
    std::map<std::string, Int> census = connected_subgraph_census(g, k);
    std::vector<Rat> r(static_cast<std::size_t>(k));
    for (int kk = 1; kk <= k; ++kk) {
        BetaTable table = beta_table_type1(kk, Rat(1));
        Rat acc(0);
        for (const auto& entry : table.entries) {
            if (!entry.pattern.connected() || sgn(entry.beta) == 0) continue;
            auto it = census.find(entry.pattern.canonical_key());
            if (it != census.end()) acc += entry.beta * Rat(it->second);
        }
        r[static_cast<std::size_t>(kk - 1)] = acc;
    }
    return r;
}

}  // namespace zf
