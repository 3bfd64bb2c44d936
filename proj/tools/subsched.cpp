// Command line front end for the sub-network scheduling library.
//
// Subcommands walk the pipeline: `generate` emits conflict graphs, `cliques`
// dumps the Step-1 temporary graph, `select` the Step-2 consolidated graph,
// `schedule` runs Step-3 multicoloring, `experiment` drives the full batch
// harness, and `check` runs the consistency and invariant suites.
//
// Exit codes: 0 success, 1 configuration or input error, 2 invariant
// violation detected by `check`.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "subsched/experiment.hpp"
#include "subsched/io.hpp"
#include "subsched/metrics.hpp"

using namespace subsched;

namespace {

struct GraphSource {
    std::string graph_file;
    std::string family;
    int n = 0;
    double p = 0.5;
    int m = 1;
    double d = 0.25;
    std::uint64_t seed = 0;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--graph", graph_file, "edge-list file (first line n, then 1-based 'u v')");
        cmd->add_option("--family", family,
                        "graph family: line_clique, line_star, erdos_renyi, barabasi_albert, geometric");
        cmd->add_option("--n", n, "vertex count");
        cmd->add_option("--p", p, "edge probability (erdos_renyi)");
        cmd->add_option("--m", m, "attachment count (barabasi_albert)");
        cmd->add_option("--d", d, "interference diameter (geometric)");
        cmd->add_option("--seed", seed, "generator seed");
    }

    GenSpec spec() const {
        GenSpec s;
        s.family = family_from_name(family);
        s.n = n;
        s.p = p;
        s.m = m;
        s.d = d;
        s.seed = seed;
        s.validate();
        return s;
    }

    ConflictGraph load() const {
        if (!graph_file.empty()) return load_edge_list_file(graph_file);
        if (family.empty())
            throw std::invalid_argument("need either --graph <file> or --family/--n");
        return generate(spec());
    }
};

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write to " + out_path);
    out << content;
}

std::string consolidated_to_json(const ConsolidatedGraph& cg) {
    SelectionResult sel;
    sel.consolidated = cg;
    sel.representation.assign(cg.origin_n, {});
    for (int i = 0; i < cg.num_vertices(); ++i)
        for (UserId u : cg.vertices[i].members) sel.representation[u].push_back(i);
    for (UserId u = 0; u < cg.origin_n; ++u)
        if (!sel.representation[u].empty()) sel.scope.push_back(u);
    return selection_to_json(sel);
}

int run_generate(const GraphSource& src, const std::string& out, bool dot, bool as_json) {
    if (src.family == "geometric" && as_json) {
        auto [net, g] = geometric(src.n, src.d, src.seed);
        write_output(out, network_to_json(net, g));
        return 0;
    }
    const ConflictGraph g = src.load();
    if (dot) {
        write_output(out, to_dot(g));
    } else {
        std::ostringstream oss;
        save_edge_list(oss, g);
        write_output(out, oss.str());
    }
    return 0;
}

int run_cliques(const GraphSource& src, int rho, const std::string& out, bool dot) {
    const ConflictGraph g = src.load();
    const ConsolidatedGraph temp = build_temp_graph(g, enumerate_r_cliques(g, rho));
    write_output(out, dot ? to_dot(temp) : consolidated_to_json(temp));
    return 0;
}

int run_select(const GraphSource& src, int rho, const std::string& algorithm,
               const std::string& out, bool dot) {
    const ConflictGraph g = src.load();
    const ConsolidatedGraph temp = build_temp_graph(g, enumerate_r_cliques(g, rho));
    SelectionResult sel;
    if (algorithm == "aggressive")
        sel = aggressive_centralized(temp, g, rho);
    else if (algorithm == "conservative")
        sel = conservative_select(temp, g, rho);
    else
        throw std::invalid_argument("select: --algorithm must be aggressive or conservative");
    write_output(out, dot ? to_dot(sel.consolidated) : selection_to_json(sel));
    return 0;
}

int run_schedule(const GraphSource& src, int rho, const std::string& algorithm, double epsilon,
                 int nbar, int max_k, std::uint64_t seed, const std::string& out) {
    const ConflictGraph g = src.load();
    const ConsolidatedGraph temp = build_temp_graph(g, enumerate_r_cliques(g, rho));
    SelectionResult sel;
    if (algorithm == "aggressive")
        sel = aggressive_centralized(temp, g, rho);
    else if (algorithm == "conservative")
        sel = conservative_select(temp, g, rho);
    else
        throw std::invalid_argument("schedule: --algorithm must be aggressive or conservative");

    if (nbar <= 0) nbar = std::max(g.num_vertices(), 2);
    const int k = std::min(kuhn_k(nbar, epsilon), max_k);
    const auto vectors = draw_vectors(g.num_vertices(), k, nbar, seed);
    const ColorAssignment assign = multicolor(sel.consolidated, assign_clique_vectors(sel.consolidated, vectors));

    std::ostringstream oss;
    oss << "vertex,k,acquired,fraction\n";
    for (int w = 0; w < sel.consolidated.num_vertices(); ++w) {
        const auto& members = sel.consolidated.vertices[w].members;
        oss << "\"{";
        for (std::size_t i = 0; i < members.size(); ++i)
            oss << (i ? "," : "") << members[i] + 1;
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", double(assign.acquired[w].size()) / double(k));
        oss << "}\"," << k << ',' << assign.acquired[w].size() << ',' << buf << "\n";
    }
    const AlphaReport emp = alpha_empirical(assign, sel);
    oss << "# empirical alpha = " << emp.ideal.str() << " = ";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6f", emp.ideal.value());
    oss << buf << "\n";
    write_output(out, oss.str());
    return 0;
}

int run_experiment_cmd(const std::string& config_path, const std::string& preset_name,
                       const std::string& out, std::uint64_t seed, bool seed_set, int jobs,
                       const std::string& format) {
    std::vector<ExperimentConfig> configs;
    std::string default_out;
    if (!config_path.empty()) {
        std::ifstream in(config_path);
        if (!in) throw std::invalid_argument("cannot open config: " + config_path);
        std::stringstream ss;
        ss << in.rdbuf();
        ExperimentConfig cfg = config_from_json(ss.str());
        default_out = cfg.output;
        configs.push_back(std::move(cfg));
    } else if (!preset_name.empty()) {
        configs = preset_by_name(preset_name).configs;
    } else {
        throw std::invalid_argument("experiment: need --config <path> or --preset <name>");
    }

    std::vector<MetricsRow> rows;
    for (ExperimentConfig& cfg : configs) {
        if (seed_set) cfg.master_seed = seed;
        auto batch = run_experiment(cfg, jobs);
        rows.insert(rows.end(), std::make_move_iterator(batch.begin()),
                    std::make_move_iterator(batch.end()));
    }
    const std::string dest = !out.empty() ? out : default_out;
    write_output(dest, format == "json" ? rows_to_json(rows) : rows_to_csv(rows));
    return 0;
}

int run_check(const GraphSource& src, int rho, int tau, double epsilon, std::uint64_t seed) {
    const ConflictGraph g = src.load();
    bool ok = true;
    auto report_line = [&](const std::string& name, const std::optional<std::string>& violation) {
        if (violation) {
            ok = false;
            std::cout << "FAIL " << name << ": " << *violation << "\n";
        } else {
            std::cout << "PASS " << name << "\n";
        }
    };

    const ConsolidatedGraph temp = build_temp_graph(g, enumerate_r_cliques(g, rho));
    const SelectionResult agg = aggressive_centralized(temp, g, rho);
    report_line("aggressive-invariants", verify_selection(agg, g));
    const SelectionResult con = conservative_select(temp, g, rho);
    report_line("conservative-invariants", verify_selection(con, g));

    const ConsistencyReport consistency = check_view_consistency(g, rho, tau);
    report_line("view-consistency",
                consistency.pass ? std::nullopt : std::optional<std::string>(consistency.failure));

    const int nbar = std::max(g.num_vertices(), 2);
    const int k = std::min(kuhn_k(nbar, epsilon), 2000);
    const auto vectors = draw_vectors(g.num_vertices(), k, nbar, seed);
    for (const SelectionResult* sel : {&agg, &con}) {
        const ColorAssignment assign =
            multicolor(sel->consolidated, assign_clique_vectors(sel->consolidated, vectors));
        report_line(sel == &agg ? "proper-coloring-aggressive" : "proper-coloring-conservative",
                    verify_proper_coloring(sel->consolidated, assign));
        const NetRateBounds net = net_rate_bounds(assign, *sel);
        report_line(sel == &agg ? "net-bounds-aggressive" : "net-bounds-conservative",
                    net.lower <= net.upper + 1e-12
                        ? std::nullopt
                        : std::optional<std::string>("lower bound exceeds upper bound"));
    }
    return ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"distributed sub-network scheduling over conflict graphs"};
    app.require_subcommand(1);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "emit a conflict graph (edge list, DOT or JSON)");
    GraphSource gen_src;
    gen_src.add_options(gen_cmd);
    std::string gen_out;
    bool gen_dot = false, gen_json = false;
    gen_cmd->add_option("--out", gen_out, "output path (default stdout)");
    gen_cmd->add_flag("--dot", gen_dot, "emit DOT instead of an edge list");
    gen_cmd->add_flag("--json", gen_json, "emit the full network as JSON (geometric only)");

    // cliques
    auto* cliques_cmd = app.add_subcommand("cliques", "dump the Step-1 temporary clique graph");
    GraphSource cliques_src;
    cliques_src.add_options(cliques_cmd);
    int cliques_rho = 1;
    std::string cliques_out;
    bool cliques_dot = false;
    cliques_cmd->add_option("--rho", cliques_rho, "maximum clique diameter")->required();
    cliques_cmd->add_option("--out", cliques_out, "output path (default stdout)");
    cliques_cmd->add_flag("--dot", cliques_dot, "emit DOT instead of JSON");

    // select
    auto* select_cmd = app.add_subcommand("select", "dump the Step-2 consolidated graph");
    GraphSource select_src;
    select_src.add_options(select_cmd);
    int select_rho = 1;
    std::string select_algo = "aggressive", select_out;
    bool select_dot = false;
    select_cmd->add_option("--rho", select_rho, "maximum clique diameter")->required();
    select_cmd->add_option("--algorithm", select_algo, "aggressive or conservative");
    select_cmd->add_option("--out", select_out, "output path (default stdout)");
    select_cmd->add_flag("--dot", select_dot, "emit DOT instead of JSON");

    // schedule
    auto* sched_cmd = app.add_subcommand("schedule", "run Step-3 multicoloring and report per-vertex slots");
    GraphSource sched_src;
    sched_src.add_options(sched_cmd);
    int sched_rho = 1, sched_nbar = 0, sched_max_k = 20000;
    double sched_eps = 0.3;
    std::string sched_algo = "aggressive", sched_out;
    std::uint64_t sched_seed = 0;
    sched_cmd->add_option("--rho", sched_rho, "maximum clique diameter")->required();
    sched_cmd->add_option("--algorithm", sched_algo, "aggressive or conservative");
    sched_cmd->add_option("--epsilon", sched_eps, "multicoloring epsilon (0,1)");
    sched_cmd->add_option("--nbar", sched_nbar, "assumed upper bound on N (default max(n,2))");
    sched_cmd->add_option("--max-k", sched_max_k, "cap on the slot count k");
    sched_cmd->add_option("--run-seed", sched_seed, "seed for the color vectors");
    sched_cmd->add_option("--out", sched_out, "output path (default stdout)");

    // experiment
    auto* exp_cmd = app.add_subcommand("experiment", "run a batch experiment to CSV or JSON");
    std::string exp_config, exp_preset, exp_out, exp_format = "csv";
    std::uint64_t exp_seed = 0;
    int exp_jobs = 1;
    exp_cmd->add_option("--config", exp_config, "experiment config JSON");
    exp_cmd->add_option("--preset", exp_preset, "named figure preset");
    exp_cmd->add_option("--out", exp_out, "output path (default: config's output, else stdout)");
    auto* exp_seed_opt = exp_cmd->add_option("--seed", exp_seed, "override the master seed");
    exp_cmd->add_option("--jobs", exp_jobs, "parallel replicate workers");
    exp_cmd->add_option("--format", exp_format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));

    // check
    auto* check_cmd = app.add_subcommand("check", "consistency + invariant suites (exit 2 on violation)");
    GraphSource check_src;
    check_src.add_options(check_cmd);
    int check_rho = 1, check_tau = -1;
    double check_eps = 0.3;
    std::uint64_t check_seed = 0;
    check_cmd->add_option("--rho", check_rho, "maximum clique diameter")->required();
    check_cmd->add_option("--tau", check_tau, "connectivity hops for the distributed run (default 3*rho+1)");
    check_cmd->add_option("--epsilon", check_eps, "multicoloring epsilon for the coloring checks");
    check_cmd->add_option("--run-seed", check_seed, "seed for the coloring checks");

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen_cmd->parsed()) return run_generate(gen_src, gen_out, gen_dot, gen_json);
        if (cliques_cmd->parsed()) return run_cliques(cliques_src, cliques_rho, cliques_out, cliques_dot);
        if (select_cmd->parsed())
            return run_select(select_src, select_rho, select_algo, select_out, select_dot);
        if (sched_cmd->parsed())
            return run_schedule(sched_src, sched_rho, sched_algo, sched_eps, sched_nbar,
                                sched_max_k, sched_seed, sched_out);
        if (exp_cmd->parsed())
            return run_experiment_cmd(exp_config, exp_preset, exp_out, exp_seed,
                                      exp_seed_opt->count() > 0, exp_jobs, exp_format);
        if (check_cmd->parsed())
            return run_check(check_src, check_rho, check_tau, check_eps, check_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
