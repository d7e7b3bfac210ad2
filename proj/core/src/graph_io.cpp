#include "zf/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace zf {

namespace {

using json = nlohmann::ordered_json;

std::string node_id(int index, int n) {
    int width = 1;
    for (int v = n - 1; v >= 10; v /= 10) ++width;
    std::string digits = std::to_string(index);
    return "v" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
}

}  // namespace

DecoratedGraph parse_graph_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw ConfigError(std::string("graph file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("K") || !doc.contains("nodes") ||
        !doc.contains("edges"))
        throw ConfigError("graph file: expected object with K, nodes, edges");
    if (!doc["K"].is_number_integer()) throw ConfigError("graph file: K must be an integer");
    const int K = doc["K"].get<int>();
    if (K < 1) throw ConfigError("graph file: K must be >= 1");

    std::vector<std::pair<std::string, std::vector<Rat>>> nodes;
    for (const auto& nd : doc["nodes"]) {
        if (!nd.contains("id") || !nd.contains("a"))
            throw ConfigError("graph file: node needs id and a");
        std::vector<Rat> a;
        for (const auto& w : nd["a"]) a.push_back(rat_from_string(w.get<std::string>()));
        if (a.size() != static_cast<std::size_t>(K))
            throw ConfigError("graph file: node weight vector must have length K");
        nodes.emplace_back(nd["id"].get<std::string>(), std::move(a));
    }
    std::sort(nodes.begin(), nodes.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::map<std::string, int> index;
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
        if (!index.emplace(nodes[static_cast<std::size_t>(i)].first, i).second)
            throw ConfigError("graph file: duplicate node id " +
                              nodes[static_cast<std::size_t>(i)].first);
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<EdgeMatrix> mats;
    for (const auto& ed : doc["edges"]) {
        if (!ed.contains("u") || !ed.contains("v") || !ed.contains("A"))
            throw ConfigError("graph file: edge needs u, v, A");
        std::string u = ed["u"].get<std::string>();
        std::string v = ed["v"].get<std::string>();
        if (!index.count(u) || !index.count(v))
            throw ConfigError("graph file: edge references unknown node");
        if (!(u < v))
            throw ConfigError("graph file: edge must list the lexicographically smaller id "
                              "first (u < v)");
        EdgeMatrix m(K, Rat(0));
        const auto& rows = ed["A"];
        if (rows.size() != static_cast<std::size_t>(K))
            throw ConfigError("graph file: edge matrix must be K x K");
        for (int i = 0; i < K; ++i) {
            const auto& row = rows[static_cast<std::size_t>(i)];
            if (row.size() != static_cast<std::size_t>(K))
                throw ConfigError("graph file: edge matrix must be K x K");
            for (int j = 0; j < K; ++j)
                m.at(i, j) = rat_from_string(row[static_cast<std::size_t>(j)].get<std::string>());
        }
        edges.emplace_back(index[u], index[v]);
        mats.push_back(std::move(m));
    }

    // Sort edges (with their matrices) into canonical order.
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    std::vector<std::pair<int, int>> sorted_edges;
    std::vector<EdgeMatrix> sorted_mats;
    for (std::size_t i : order) {
        sorted_edges.push_back(edges[i]);
        sorted_mats.push_back(std::move(mats[i]));
    }

    std::vector<std::vector<Rat>> node_w;
    node_w.reserve(nodes.size());
    for (auto& [id, a] : nodes) node_w.push_back(std::move(a));

    return DecoratedGraph(static_cast<int>(nodes.size()), K, std::move(sorted_edges),
                          std::move(node_w), std::move(sorted_mats));
}

DecoratedGraph read_graph_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open graph file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph_json(ss.str());
}

std::string write_graph_json(const DecoratedGraph& g) {
    json doc;
    doc["K"] = g.color_count();
    json nodes = json::array();
    for (int u = 0; u < g.node_count(); ++u) {
        json nd;
        nd["id"] = node_id(u, g.node_count());
        json a = json::array();
        for (int c = 0; c < g.color_count(); ++c) a.push_back(rat_to_string(g.node_weight(u, c)));
        nd["a"] = a;
        nodes.push_back(nd);
    }
    doc["nodes"] = nodes;
    json edges = json::array();
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        json ed;
        ed["u"] = node_id(u, g.node_count());
        ed["v"] = node_id(v, g.node_count());
        json rows = json::array();
        for (int i = 0; i < g.color_count(); ++i) {
            json row = json::array();
            for (int j = 0; j < g.color_count(); ++j)
                row.push_back(rat_to_string(g.edge_matrix(e).at(i, j)));
            rows.push_back(row);
        }
        ed["A"] = rows;
        edges.push_back(ed);
    }
    doc["edges"] = edges;
    return doc.dump(2) + "\n";
}

void write_graph_json(const DecoratedGraph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write graph file: " + path);
    out << write_graph_json(g);
}

}  // namespace zf
