// zf: batch experiment runner for exact and Taylor-interpolated partition
// functions on decorated graphs.
//
// Subcommands: exact, poly, taylor, pseudo, theorem1, ssm-scan, subgraph,
// selftest. Outputs are deterministic given identical config and seed.
// Exit codes: 0 ok, 1 assertion failure (theorem1/selftest), 2 config error,
// 3 budget error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "zf/exact.hpp"
#include "zf/graph_io.hpp"
#include "zf/interpolation.hpp"
#include "zf/models.hpp"
#include "zf/numeric.hpp"
#include "zf/patterns.hpp"
#include "zf/power_sums.hpp"
#include "zf/pseudo.hpp"
#include "zf/rng.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace zf;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::map<std::string, std::string> parse_kv(const std::string& s) {
    std::map<std::string, std::string> out;
    if (s.empty()) return out;
    for (const std::string& item : split(s, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw ConfigError("expected key=value in: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

int parse_int(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (...) {
        throw ConfigError(std::string(what) + ": not an integer: " + s);
    }
}

GraphStructure build_structure(const std::string& name,
                               const std::map<std::string, std::string>& params) {
    auto want = [&](const char* key) -> std::string {
        auto it = params.find(key);
        if (it == params.end())
            throw ConfigError("builder " + name + " requires param " + key);
        return it->second;
    };
    if (name == "path") return path_graph(parse_int(want("n"), "n"));
    if (name == "cycle") return cycle_graph(parse_int(want("n"), "n"));
    if (name == "complete") return complete_graph(parse_int(want("n"), "n"));
    if (name == "edgeless") return edgeless_graph(parse_int(want("n"), "n"));
    if (name == "grid") return grid_graph(parse_int(want("w"), "w"), parse_int(want("h"), "h"));
    if (name == "regular_tree")
        return regular_tree(parse_int(want("d"), "d"), parse_int(want("depth"), "depth"));
    throw ConfigError("unknown builder: " + name +
                      " (expected path|cycle|complete|edgeless|grid|regular_tree)");
}

ModelSpec parse_model(const std::string& spec, int n_nodes) {
    auto colon = spec.find(':');
    std::string name = spec.substr(0, colon);
    std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (name == "hardcore") {
        auto kv = parse_kv(rest);
        if (!kv.count("lambda")) throw ConfigError("hardcore model requires lambda");
        return HardcoreSpec{rat_from_string(kv["lambda"])};
    }
    if (name == "coloring") {
        auto kv = parse_kv(rest);
        if (!kv.count("K")) throw ConfigError("coloring model requires K");
        return ProperColoringSpec{parse_int(kv["K"], "K")};
    }
    if (name == "ising") {
        auto kv = parse_kv(rest);
        if (!kv.count("h") || !kv.count("b")) throw ConfigError("ising model requires h and b");
        return IsingSpec{rat_from_string(kv["h"]), rat_from_string(kv["b"])};
    }
    if (name == "list") {
        // list:K=3;lists=1|2,2|3,1|3   (per-node lists, colors 1-based)
        auto semi = rest.find(';');
        if (semi == std::string::npos)
            throw ConfigError("list model: expected list:K=..;lists=..");
        auto kv = parse_kv(rest.substr(0, semi));
        std::string tail = rest.substr(semi + 1);
        if (!kv.count("K") || tail.rfind("lists=", 0) != 0)
            throw ConfigError("list model: expected list:K=..;lists=..");
        ListColoringSpec out;
        out.K = parse_int(kv["K"], "K");
        for (const std::string& node_list : split(tail.substr(6), ',')) {
            std::vector<int> colors;
            if (!node_list.empty())
                for (const std::string& c : split(node_list, '|'))
                    colors.push_back(parse_int(c, "color") - 1);
            out.lists.push_back(std::move(colors));
        }
        if (static_cast<int>(out.lists.size()) != n_nodes)
            throw ConfigError("list model: need one list per node");
        return out;
    }
    throw ConfigError("unknown model: " + name + " (expected hardcore|coloring|list|ising)");
}

std::vector<int> parse_ids(const std::string& s) {
    std::vector<int> out;
    for (const std::string& tok : split(s, ','))
        if (!tok.empty()) out.push_back(parse_int(tok, "node id"));
    return out;
}

/// Colors on the CLI are 1-based, matching the color set {1..K}.
std::vector<int> parse_colors(const std::string& s, int K) {
    std::vector<int> out;
    for (const std::string& tok : split(s, ',')) {
        if (tok.empty()) continue;
        int c = parse_int(tok, "color");
        if (c < 1 || c > K) throw ConfigError("color out of range 1..K: " + tok);
        out.push_back(c - 1);
    }
    return out;
}

std::vector<int> parse_radii(const std::string& s) {
    std::vector<int> out;
    auto colon = s.find(':');
    if (colon != std::string::npos) {
        int lo = parse_int(s.substr(0, colon), "R");
        int hi = parse_int(s.substr(colon + 1), "R");
        for (int r = lo; r <= hi; ++r) out.push_back(r);
    } else {
        for (const std::string& tok : split(s, ','))
            if (!tok.empty()) out.push_back(parse_int(tok, "R"));
    }
    if (out.empty()) throw ConfigError("empty radius list");
    return out;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct CommonOpts {
    std::string graph_file;
    std::string builder;
    std::string params;
    std::string model;
    std::string kind_str = "type1";
    std::string s_nodes;
    std::string sigma;
    std::string t_nodes;
    std::string tau;
    int R = 0;
    int m = 0;
    std::string z = "1";
    std::optional<std::uint64_t> seed;
    std::int64_t budget_states = 0;  // 0 = default
    std::int64_t tau_budget = 4096;
    int precision_bits = 128;
    std::string out_path;
    std::string format;  // default: json for reports, csv for sweep outputs

    Budget budget() const {
        if (budget_states < 0) throw ConfigError("--budget must be positive");
        if (tau_budget < 1) throw ConfigError("--tau-budget must be positive");
        Budget b;
        if (budget_states > 0) b.max_states = budget_states;
        return b;
    }
    InterpolationKind kind() const {
        if (kind_str == "type1") return InterpolationKind::TypeI;
        if (kind_str == "type2") return InterpolationKind::TypeII;
        throw ConfigError("kind must be type1 or type2");
    }
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_model = true) {
    cmd->add_option("--graph", o.graph_file, "decorated graph JSON file");
    cmd->add_option("--builder", o.builder, "test graph builder name");
    cmd->add_option("--params", o.params, "builder params, k=v,...");
    if (with_model) cmd->add_option("--model", o.model, "model spec, e.g. hardcore:lambda=1/2");
    cmd->add_option("--seed", o.seed, "seed for any sampled mode");
    cmd->add_option("--budget", o.budget_states, "enumeration budget (max colorings)");
    cmd->add_option("--tau-budget", o.tau_budget, "max boundary assignments before sampling");
    cmd->add_option("--precision-bits", o.precision_bits, "numeric rendering precision");
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--format", o.format, "json|csv");
}

DecoratedGraph resolve_graph(const CommonOpts& o) {
    if (!o.graph_file.empty()) {
        if (!o.model.empty())
            throw ConfigError("--model cannot be combined with --graph (file is decorated)");
        return read_graph_json(o.graph_file);
    }
    if (o.builder.empty()) throw ConfigError("need --graph FILE or --builder NAME");
    GraphStructure gs = build_structure(o.builder, parse_kv(o.params));
    if (o.model.empty()) throw ConfigError("--builder requires --model");
    return build_model(gs, parse_model(o.model, gs.n));
}

GraphStructure resolve_structure(const CommonOpts& o) {
    if (!o.builder.empty()) return build_structure(o.builder, parse_kv(o.params));
    if (!o.graph_file.empty()) {
        DecoratedGraph g = read_graph_json(o.graph_file);
        return GraphStructure{g.node_count(), g.edges()};
    }
    throw ConfigError("need --graph FILE or --builder NAME");
}

void emit(const CommonOpts& o, const std::string& text) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path, std::ios::binary);
    if (!f) throw ConfigError("cannot write output file: " + o.out_path);
    f << text;
}

void require_format(const CommonOpts& o, const char* supported) {
    if (o.format.empty() || o.format == supported) return;
    throw ConfigError(std::string("this subcommand emits ") + supported + ", not " + o.format);
}

json numeric_json(const NumericRendering& r) {
    json j;
    j["value"] = r.decimal;
    j["precision_bits"] = r.precision_bits;
    return j;
}

ColorAssignment assignment_for(const std::vector<int>& nodes, const std::vector<int>& colors,
                               const char* what) {
    if (nodes.size() != colors.size())
        throw ConfigError(std::string(what) + ": node and color lists differ in length");
    ColorAssignment a;
    for (std::size_t i = 0; i < nodes.size(); ++i) a.set(nodes[i], colors[i]);
    return a;
}

// --- subcommand bodies -----------------------------------------------------

int run_exact(const CommonOpts& o) {
    require_format(o, "json");
    DecoratedGraph g = resolve_graph(o);
    json out;
    out["Z"] = rat_to_string(partition_exact(g, o.budget()));
    if (!o.s_nodes.empty()) {
        NodeSet S(parse_ids(o.s_nodes));
        ColorAssignment sigma =
            assignment_for(S.ids(), parse_colors(o.sigma, g.color_count()), "sigma");
        out["marginal"] = rat_to_string(marginal(g, S, sigma, o.budget()));
        Rat z_red = partition_exact(reduce(g, sigma), o.budget());
        Rat z = partition_exact(g, o.budget());
        out["ratio_identity"] = rat_to_string(z_red / z);
        if (!o.t_nodes.empty()) {
            NodeSet T(parse_ids(o.t_nodes));
            ColorAssignment tau =
                assignment_for(T.ids(), parse_colors(o.tau, g.color_count()), "tau");
            out["conditional"] =
                rat_to_string(conditional_marginal(g, S, sigma, T, tau, o.budget()));
        }
    }
    emit(o, out.dump(2) + "\n");
    return 0;
}

int run_poly(const CommonOpts& o) {
    require_format(o, "json");
    DecoratedGraph g = resolve_graph(o);
    RationalPolynomial p = graph_polynomial(g, o.kind(), o.budget());
    json out;
    out["kind"] = o.kind_str;
    json coeffs = json::array();
    for (const Rat& c : p.coeffs()) coeffs.push_back(rat_to_string(c));
    out["coefficients"] = coeffs;
    out["degree"] = p.degree();
    out["at_0"] = rat_to_string(p.evaluate(Rat(0)));
    out["at_1"] = rat_to_string(p.evaluate(Rat(1)));
    emit(o, out.dump(2) + "\n");
    return 0;
}

int run_taylor(const CommonOpts& o) {
    require_format(o, "json");
    DecoratedGraph g = resolve_graph(o);
    RationalPolynomial p = graph_polynomial(g, o.kind(), o.budget());
    PowerSumTable newton = power_sums_newton(p, o.m);
    PowerSumTable girard = power_sums_girard(p, o.m);
    for (int k = 1; k <= o.m; ++k)
        if (newton.at(k) != girard.at(k))
            throw Error("taylor: Newton and Girard power sums disagree");
    TaylorApprox tay = taylor_truncation(p, o.m);
    Rat z = rat_from_string(o.z);

    json out;
    out["kind"] = o.kind_str;
    out["m"] = o.m;
    out["c0"] = rat_to_string(tay.constant);
    json r = json::array();
    for (int k = 1; k <= o.m; ++k) r.push_back(rat_to_string(newton.at(k)));
    out["power_sums"] = r;
    json t = json::array();
    for (int k = 1; k <= o.m; ++k) t.push_back(rat_to_string(tay.coeff(k)));
    out["t"] = t;
    out["z"] = rat_to_string(z);
    Rat expo = tay.exponent_at(z);
    out["exponent_at_z"] = rat_to_string(expo);
    out["exp_Tm_at_z"] = numeric_json(render_exp(tay.constant, expo, o.precision_bits));
    Rat zg = partition_exact(g, o.budget());
    out["Z"] = rat_to_string(zg);
    if (sgn(zg) != 0 && z == 1)
        out["relative_error"] =
            format_double(relative_error_exp(tay.constant, expo, zg, o.precision_bits));
    emit(o, out.dump(2) + "\n");
    return 0;
}

int run_pseudo(const CommonOpts& o) {
    require_format(o, "json");
    DecoratedGraph g = resolve_graph(o);
    NodeSet S(parse_ids(o.s_nodes));
    ColorAssignment sigma =
        assignment_for(S.ids(), parse_colors(o.sigma, g.color_count()), "sigma");
    Rat z = rat_from_string(o.z);
    PseudoMarginal nu;
    json out;
    if (!o.t_nodes.empty()) {
        NodeSet T(parse_ids(o.t_nodes));
        ColorAssignment tau = assignment_for(T.ids(), parse_colors(o.tau, g.color_count()), "tau");
        nu = conditional_pseudo_marginal(g, S, sigma, T, tau, o.kind(), z, o.m, o.budget());
        out["conditional"] = true;
    } else {
        nu = pseudo_marginal(g, S, sigma, o.kind(), z, o.m, o.budget());
        out["conditional"] = false;
    }
    out["kind"] = o.kind_str;
    out["m"] = o.m;
    out["z"] = rat_to_string(z);
    out["c0_ratio"] = rat_to_string(nu.c0_ratio);
    out["exponent"] = rat_to_string(nu.exponent);
    out["value"] = numeric_json(nu.value(o.precision_bits));
    emit(o, out.dump(2) + "\n");
    return 0;
}

int run_theorem1(const CommonOpts& o) {
    require_format(o, "json");
    DecoratedGraph g = resolve_graph(o);
    NodeSet S(parse_ids(o.s_nodes));
    ColorAssignment sigma =
        assignment_for(S.ids(), parse_colors(o.sigma, g.color_count()), "sigma");
    Theorem1Report rep = theorem1_check(g, S, sigma, o.R, o.kind(), o.m, o.budget(),
                                        o.tau_budget, o.seed);
    NodeSet T = boundary(g, S, o.R);

    json out;
    out["holds"] = rep.holds;
    out["vacuous"] = rep.vacuous;
    out["sampled"] = rep.sampled;
    out["radius_ok"] = rep.radius_ok;
    out["kind"] = o.kind_str;
    out["R"] = rep.R;
    out["m"] = rep.m;
    out["min_admissible_R"] = min_admissible_radius(o.kind(), o.m);
    out["boundary"] = T.ids();
    out["tau_count"] = rep.tau_considered;
    out["tau_checked"] = rep.tau_checked;
    out["tau_skipped_infeasible"] = rep.tau_skipped_infeasible;
    if (rep.witness) {
        json w;
        json colors = json::array();
        for (int c : rep.witness->tau_colors) colors.push_back(c + 1);
        w["tau"] = colors;
        w["k"] = rep.witness->k;
        w["conditional"] = rat_to_string(rep.witness->conditional_value);
        w["unconditional"] = rat_to_string(rep.witness->unconditional_value);
        out["witness"] = w;
    } else {
        out["witness"] = nullptr;
    }
    out["radius_note"] = rep.radius_note;
    emit(o, out.dump(2) + "\n");
    if (!rep.holds) {
        std::cerr << "error: assertion: theorem1 equality failed (see witness)\n";
        return 1;
    }
    return 0;
}

int run_ssm_scan(const CommonOpts& o, const std::string& radii_str, const std::string& sweep) {
    std::vector<int> radii = parse_radii(radii_str);

    struct SweepPoint {
        std::string param;
        Rat value;
        DecoratedGraph g;
    };
    std::vector<SweepPoint> points;

    if (sweep.empty()) {
        DecoratedGraph g = resolve_graph(o);
        points.push_back({"-", Rat(0), std::move(g)});
    } else {
        auto eq = sweep.find('=');
        if (eq == std::string::npos) throw ConfigError("--sweep expects param=lo:hi:step");
        std::string param = sweep.substr(0, eq);
        auto parts = split(sweep.substr(eq + 1), ':');
        if (parts.size() != 3) throw ConfigError("--sweep expects param=lo:hi:step");
        Rat lo = rat_from_string(parts[0]);
        Rat hi = rat_from_string(parts[1]);
        Rat step = rat_from_string(parts[2]);
        if (sgn(step) <= 0) throw ConfigError("--sweep step must be positive");
        GraphStructure gs = resolve_structure(o);
        if (o.model.empty()) throw ConfigError("--sweep requires --model");
        for (Rat v = lo; v <= hi; v += step) {
            ModelSpec spec = parse_model(o.model, gs.n);
            if (param == "lambda") {
                if (!std::holds_alternative<HardcoreSpec>(spec))
                    throw ConfigError("--sweep lambda requires hardcore model");
                std::get<HardcoreSpec>(spec).lambda = v;
            } else if (param == "b") {
                if (!std::holds_alternative<IsingSpec>(spec))
                    throw ConfigError("--sweep b requires ising model");
                std::get<IsingSpec>(spec).b = v;
            } else if (param == "h") {
                if (!std::holds_alternative<IsingSpec>(spec))
                    throw ConfigError("--sweep h requires ising model");
                std::get<IsingSpec>(spec).h_factor = v;
            } else {
                throw ConfigError("--sweep param must be lambda, b or h");
            }
            points.push_back({param, v, build_model(gs, spec)});
        }
    }

    if (!o.format.empty() && o.format != "csv" && o.format != "json")
        throw ConfigError("ssm-scan emits csv or json, not " + o.format);
    const bool as_json = o.format == "json";

    std::ostringstream csv;
    json jrows = json::array();
    csv << "param,value,R,rho,rho_mode,boundary_empty,m,kind,radius_ok,pseudo_gap_zero,"
           "pseudo_gap,tau_considered\n";
    for (const auto& pt : points) {
        NodeSet S(parse_ids(o.s_nodes));
        auto rows = ssm_scan(pt.g, S, radii, o.kind(), o.m, o.budget(), o.tau_budget, o.seed);
        for (const auto& row : rows) {
            std::string value = pt.param == "-" ? "-" : rat_to_string(pt.value);
            if (as_json) {
                json j;
                j["param"] = pt.param;
                j["value"] = value;
                j["R"] = row.R;
                j["rho"] = rat_to_string(row.rho);
                j["rho_mode"] = row.rho_sampled ? "sampled_lower_bound" : "exact";
                j["boundary_empty"] = row.boundary_empty;
                j["m"] = row.m;
                j["kind"] = o.kind_str;
                j["radius_ok"] = row.radius_ok;
                j["pseudo_gap_zero"] = row.pseudo_gap_zero;
                j["pseudo_gap"] = format_double(row.pseudo_gap);
                j["tau_considered"] = row.tau_considered;
                jrows.push_back(j);
            } else {
                csv << pt.param << ',' << value << ',' << row.R << ','
                    << rat_to_string(row.rho) << ','
                    << (row.rho_sampled ? "sampled_lower_bound" : "exact") << ','
                    << (row.boundary_empty ? 1 : 0) << ',' << row.m << ',' << o.kind_str << ','
                    << (row.radius_ok ? 1 : 0) << ',' << (row.pseudo_gap_zero ? 1 : 0) << ','
                    << format_double(row.pseudo_gap) << ',' << row.tau_considered << '\n';
            }
        }
    }
    emit(o, as_json ? jrows.dump(2) + "\n" : csv.str());
    return 0;
}

int run_subgraph(const CommonOpts& o, int count_connected, int beta_k,
                 const std::string& pattern_edges, int pattern_nodes) {
    require_format(o, "json");
    GraphStructure gs = resolve_structure(o);
    json out;
    if (count_connected > 0) {
        auto counts = connected_subgraph_counts(gs, count_connected);
        json sizes = json::array();
        for (std::size_t k = 1; k < counts.size(); ++k) sizes.push_back(counts[k].get_str());
        out["connected_counts"] = sizes;
        json census = json::object();
        for (const auto& [key, count] : connected_subgraph_census(gs, count_connected))
            census[key] = count.get_str();
        out["connected_census"] = census;
    }
    if (beta_k > 0) {
        Rat lambda(1);
        if (!o.model.empty()) {
            ModelSpec spec = parse_model(o.model, gs.n);
            if (!std::holds_alternative<HardcoreSpec>(spec))
                throw ConfigError("beta table requires a hardcore model");
            lambda = std::get<HardcoreSpec>(spec).lambda;
        }
        BetaTable bt = beta_table_type1(beta_k, lambda);
        json rows = json::array();
        for (const auto& e : bt.entries) {
            json row;
            row["pattern"] = e.pattern.canonical_key();
            row["nodes"] = e.pattern.node_count();
            row["edges"] = e.pattern.edge_count();
            row["connected"] = e.pattern.connected();
            row["beta"] = rat_to_string(e.beta);
            rows.push_back(row);
        }
        out["beta_k"] = beta_k;
        out["lambda"] = rat_to_string(lambda);
        out["beta_table"] = rows;
        out["roots_via_beta"] = rat_to_string(beta_representation_value(bt, gs));
    }
    if (!pattern_edges.empty() || pattern_nodes > 0) {
        if (pattern_nodes <= 0)
            throw ConfigError("--pattern-nodes required with --pattern-edges");
        std::vector<std::pair<int, int>> edges;
        if (!pattern_edges.empty())
            for (const std::string& tok : split(pattern_edges, ',')) {
                auto dash = tok.find('-');
                if (dash == std::string::npos)
                    throw ConfigError("pattern edge must be u-v: " + tok);
                edges.emplace_back(parse_int(tok.substr(0, dash), "u"),
                                   parse_int(tok.substr(dash + 1), "v"));
            }
        PatternGraph f(pattern_nodes, edges);
        out["pattern"] = f.canonical_key();
        out["ind_count"] = ind_count(f, gs).get_str();
    }
    emit(o, out.dump(2) + "\n");
    return 0;
}

int run_selftest(const CommonOpts& o);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact and Taylor-interpolated partition functions on decorated graphs"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string radii_str = "1:4";
    std::string sweep;
    int count_connected = 0;
    int beta_k = 0;
    std::string pattern_edges;
    int pattern_nodes = 0;

    auto* c_exact = app.add_subcommand("exact", "exact Z and marginals");
    add_common(c_exact, o);
    c_exact->add_option("--S", o.s_nodes, "subset nodes, comma separated");
    c_exact->add_option("--sigma", o.sigma, "colors for S (1-based)");
    c_exact->add_option("--T", o.t_nodes, "conditioning nodes");
    c_exact->add_option("--tau", o.tau, "colors for T (1-based)");

    auto* c_poly = app.add_subcommand("poly", "interpolation polynomial coefficients");
    add_common(c_poly, o);
    c_poly->add_option("--kind", o.kind_str, "type1|type2");

    auto* c_taylor = app.add_subcommand("taylor", "power sums and Taylor truncation");
    add_common(c_taylor, o);
    c_taylor->add_option("--kind", o.kind_str, "type1|type2");
    c_taylor->add_option("--m", o.m, "truncation order")->required();
    c_taylor->add_option("--z", o.z, "evaluation point p/q");

    auto* c_pseudo = app.add_subcommand("pseudo", "pseudo-marginals");
    add_common(c_pseudo, o);
    c_pseudo->add_option("--kind", o.kind_str, "type1|type2");
    c_pseudo->add_option("--m", o.m, "truncation order")->required();
    c_pseudo->add_option("--z", o.z, "evaluation point p/q");
    c_pseudo->add_option("--S", o.s_nodes, "subset nodes")->required();
    c_pseudo->add_option("--sigma", o.sigma, "colors for S (1-based)")->required();
    c_pseudo->add_option("--T", o.t_nodes, "conditioning nodes");
    c_pseudo->add_option("--tau", o.tau, "colors for T (1-based)");

    auto* c_t1 = app.add_subcommand("theorem1", "boundary-independence check");
    add_common(c_t1, o);
    c_t1->add_option("--kind", o.kind_str, "type1|type2");
    c_t1->add_option("--m", o.m, "truncation order")->required();
    c_t1->add_option("--R", o.R, "boundary radius")->required();
    c_t1->add_option("--S", o.s_nodes, "subset nodes")->required();
    c_t1->add_option("--sigma", o.sigma, "colors for S (1-based)")->required();

    auto* c_scan = app.add_subcommand("ssm-scan", "correlation decay rows");
    add_common(c_scan, o);
    c_scan->add_option("--kind", o.kind_str, "type1|type2");
    c_scan->add_option("--m", o.m, "truncation order for the pseudo-gap column");
    c_scan->add_option("--R", radii_str, "radii, lo:hi or comma list");
    c_scan->add_option("--S", o.s_nodes, "subset nodes")->required();
    c_scan->add_option("--sweep", sweep, "param=lo:hi:step model sweep");

    auto* c_sub = app.add_subcommand("subgraph", "Ind counts, connected enumeration, beta table");
    add_common(c_sub, o);
    c_sub->add_option("--count-connected", count_connected, "enumerate up to this size");
    c_sub->add_option("--beta", beta_k, "emit beta table for this k (<= 4)");
    c_sub->add_option("--pattern-nodes", pattern_nodes, "pattern node count");
    c_sub->add_option("--pattern-edges", pattern_edges, "pattern edges u-v,...");

    auto* c_self = app.add_subcommand("selftest", "run the invariant battery");
    add_common(c_self, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*c_exact) return run_exact(o);
        if (*c_poly) return run_poly(o);
        if (*c_taylor) return run_taylor(o);
        if (*c_pseudo) return run_pseudo(o);
        if (*c_t1) return run_theorem1(o);
        if (*c_scan) return run_ssm_scan(o, radii_str, sweep);
        if (*c_sub) return run_subgraph(o, count_connected, beta_k, pattern_edges, pattern_nodes);
        if (*c_self) return run_selftest(o);
        std::cerr << "error: config: no subcommand\n";
        return 2;
    } catch (const BudgetError& e) {
        std::cerr << "error: budget: " << e.what() << "\n";
        return 3;
    } catch (const ConfigError& e) {
        std::cerr << "error: config: " << e.what() << "\n";
        return 2;
    } catch (const UndefinedError& e) {
        std::cerr << "error: undefined: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: internal: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int run_selftest(const CommonOpts& o) {
    require_format(o, "json");
    json checks = json::array();
    bool all_ok = true;
    auto check = [&](const std::string& name, bool ok) {
        json c;
        c["name"] = name;
        c["ok"] = ok;
        checks.push_back(c);
        if (!ok) all_ok = false;
    };
    Budget budget = o.budget();
    Rng rng(o.seed.value_or(7));

    // Factorization and marginal identities on random decorated graphs.
    {
        bool ok = true;
        for (int it = 0; it < 8 && ok; ++it) {
            int n = 2 + static_cast<int>(rng.below(4));
            GraphStructure gs = erdos_renyi(n, Rat(1, 2), rng);
            auto g = build_hardcore(gs, make_rat(1 + static_cast<long>(rng.below(3)), 2));
            ok = ok && partition_exact(disjoint_union(g, g), budget) ==
                           partition_exact(g, budget) * partition_exact(g, budget);
        }
        check("partition factorizes over disjoint unions", ok);
    }
    {
        auto g = build_hardcore(path_graph(5), Rat(1));
        NodeSet S({1});
        ColorAssignment sigma{{1, 1}};
        bool ok = marginal(g, S, sigma, budget) ==
                  partition_exact(reduce(g, sigma), budget) / partition_exact(g, budget);
        MarginalTable table = marginal_table(g, NodeSet({0, 3}), budget);
        Rat total(0);
        for (auto& [colors, p] : table.probabilities) total += p;
        check("marginal ratio identity and normalization", ok && total == 1);
    }
    {
        RationalPolynomial p({Rat(1), Rat(-3), Rat(2)});
        auto nt = power_sums_newton(p, 6);
        auto gi = power_sums_girard(p, 6);
        bool ok = true;
        for (int k = 1; k <= 6; ++k) ok = ok && nt.at(k) == gi.at(k);
        check("newton equals girard", ok);
    }
    {
        auto g = build_proper_coloring(path_graph(4), 3);
        bool ok = type2_polynomial(g, budget) == type2_polynomial_subset_oracle(g, budget);
        auto h = build_hardcore(cycle_graph(5), Rat(2));
        auto p = type1_polynomial(h, budget);
        ok = ok && p.evaluate(Rat(1)) == partition_exact(h, budget);
        ok = ok && p.evaluate(Rat(0)) == 1;
        check("interpolation endpoints and subset oracle", ok);
    }
    {
        bool ok = true;
        for (int k = 1; k <= 4 && ok; ++k) {
            BetaTable bt = beta_table_type1(k, Rat(1));
            for (const auto& e : bt.entries)
                if (!e.pattern.connected() && sgn(e.beta) != 0) ok = false;
            GraphStructure gs = grid_graph(2, 3);
            auto g = build_hardcore(gs, Rat(1));
            ok = ok && beta_representation_value(bt, gs) ==
                           power_sums_newton(type1_polynomial(g, budget), k).at(k);
        }
        check("beta tables: disconnected vanish, reproduce power sums", ok);
    }
    {
        auto g = build_hardcore(path_graph(7), Rat(1));
        auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 1}}, 3,
                                  InterpolationKind::TypeI, 1, budget);
        auto rep2 = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 1}}, 2,
                                   InterpolationKind::TypeI, 1, budget);
        check("theorem1 holds at admissible radius and fails below", rep.holds && !rep2.holds);
    }
    {
        auto g = build_proper_coloring(path_graph(7), 3);
        auto rep = theorem1_check(g, NodeSet::single(0), ColorAssignment{{0, 0}}, 2,
                                  InterpolationKind::TypeII, 1, budget);
        check("theorem1 type2 at R = 2m", rep.holds && !rep.vacuous);
    }

    json out;
    out["checks"] = checks;
    out["all_ok"] = all_ok;
    emit(o, out.dump(2) + "\n");
    if (!all_ok) {
        std::cerr << "error: assertion: selftest failed\n";
        return 1;
    }
    return 0;
}

}  // namespace
