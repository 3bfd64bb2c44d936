#include "subsched/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "subsched/io.hpp"
#include "subsched/rng.hpp"

namespace subsched {

using nlohmann::json;

namespace {
constexpr std::uint64_t kStageGraph = 0x475250u;   // "GRP"
constexpr std::uint64_t kStageVectors = 0x564543u; // "VEC" (shared with draw_vectors)
constexpr std::uint64_t kStageMs = 0x4d53u;        // "MS"
}  // namespace

std::string algorithm_name(Algorithm a) {
    switch (a) {
        case Algorithm::dc: return "dc";
        case Algorithm::ms: return "ms";
        case Algorithm::conservative: return "conservative";
        case Algorithm::aggressive: return "aggressive";
    }
    throw std::logic_error("unknown algorithm");
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "dc") return Algorithm::dc;
    if (name == "ms") return Algorithm::ms;
    if (name == "conservative") return Algorithm::conservative;
    if (name == "aggressive") return Algorithm::aggressive;
    throw std::invalid_argument("unknown algorithm: " + name +
                                " (expected dc, ms, conservative or aggressive)");
}

void ExperimentConfig::validate() const {
    if (!gen.has_value() && graph_file.empty())
        throw std::invalid_argument("config: need either a generator spec or a graph file");
    if (gen.has_value() && !graph_file.empty())
        throw std::invalid_argument("config: generator spec and graph file are mutually exclusive");
    if (gen.has_value()) gen->validate();
    if (rho.empty()) throw std::invalid_argument("config: rho list must be non-empty");
    for (int r : rho)
        if (r < 0) throw std::invalid_argument("config: rho entries must be >= 0");
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::invalid_argument("config: epsilon must lie in (0,1)");
    if (algorithms.empty()) throw std::invalid_argument("config: algorithm list must be non-empty");
    if (replications < 1) throw std::invalid_argument("config: replications must be >= 1");
    if (slots_ms < 1) throw std::invalid_argument("config: slots_ms must be >= 1");
    if (max_k < 1) throw std::invalid_argument("config: max_k must be >= 1");
    if (nbar < 0) throw std::invalid_argument("config: nbar must be >= 0");
}

namespace {

struct ReplicateContext {
    const ExperimentConfig& cfg;
    ConflictGraph graph;
    std::string family;
    std::string params;
    std::uint64_t seed = 0;

    // Step 3 material, shared across algorithms within the replicate.
    bool vectors_ready = false;
    int k = 0;
    std::vector<ColorVector> user_vectors;
};

std::vector<double> effective_capacities(const ExperimentConfig& cfg, int n) {
    if (!cfg.capacities.empty()) return cfg.capacities;
    return std::vector<double>(n, cfg.default_capacity);
}

void ensure_vectors(ReplicateContext& ctx) {
    if (ctx.vectors_ready) return;
    const int n = ctx.graph.num_vertices();
    const int nbar = ctx.cfg.nbar > 0 ? ctx.cfg.nbar : std::max(n, 2);
    ctx.k = std::min(kuhn_k(nbar, ctx.cfg.epsilon), ctx.cfg.max_k);
    ctx.user_vectors = draw_vectors(n, ctx.k, nbar,
                                    derive_seed(ctx.cfg.master_seed, {kStageVectors, ctx.seed}));
    ctx.vectors_ready = true;
}

MetricsRow base_row(const ReplicateContext& ctx, int rho, const std::string& algorithm) {
    MetricsRow row;
    row.family = ctx.family;
    row.n = ctx.graph.num_vertices();
    row.params = ctx.params;
    row.seed = ctx.seed;
    row.rho = rho;
    row.epsilon = ctx.cfg.epsilon;
    row.algorithm = algorithm;
    row.max_degree_g = ctx.graph.max_degree();
    return row;
}

void attach_empirical(ReplicateContext& ctx, const SelectionResult& sel, MetricsRow& row) {
    ensure_vectors(ctx);
    const auto vertex_vectors = assign_clique_vectors(sel.consolidated, ctx.user_vectors);
    const ColorAssignment assign = multicolor(sel.consolidated, vertex_vectors);
    row.alpha_empirical = alpha_empirical(assign, sel).ideal;
    const NetRateBounds net =
        net_rate_bounds(assign, sel, effective_capacities(ctx.cfg, sel.consolidated.origin_n));
    row.net_lower = net.lower;
    row.net_upper = net.upper;
}

std::vector<MetricsRow> run_replicate(ReplicateContext& ctx) {
    std::vector<MetricsRow> rows;
    const ExperimentConfig& cfg = ctx.cfg;

    for (int rho : cfg.rho) {
        // Steps 1+2 are shared by the algorithms that need them.
        std::optional<ConsolidatedGraph> temp;
        auto temp_graph = [&]() -> const ConsolidatedGraph& {
            if (!temp) temp = build_temp_graph(ctx.graph, enumerate_r_cliques(ctx.graph, rho));
            return *temp;
        };

        for (Algorithm algo : cfg.algorithms) {
            const auto started = std::chrono::steady_clock::now();
            auto finish = [&](MetricsRow& row) {
                if (cfg.record_runtime_ms) {
                    row.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                         std::chrono::steady_clock::now() - started)
                                         .count();
                }
                rows.push_back(row);
            };

            switch (algo) {
                case Algorithm::dc: {
                    MetricsRow row = base_row(ctx, rho, "dc");
                    const AlphaReport a = alpha_dc(ctx.graph);
                    row.alpha_ideal = a.ideal;
                    row.alpha_eps = (1.0 - cfg.epsilon) * a.ideal.value();
                    row.max_degree_grho = ctx.graph.max_degree();
                    if (cfg.empirical) {
                        // rho = 0 pipeline: the consolidated graph is G itself.
                        std::vector<CliqueVertex> singles;
                        for (UserId u = 0; u < ctx.graph.num_vertices(); ++u)
                            singles.push_back({{u}, 0});
                        SelectionResult sel;
                        sel.kind = SelectionKind::aggressive;
                        sel.consolidated = build_temp_graph(ctx.graph, singles);
                        sel.representation.assign(ctx.graph.num_vertices(), {});
                        for (UserId u = 0; u < ctx.graph.num_vertices(); ++u) {
                            sel.representation[u] = {u};
                            sel.scope.push_back(u);
                        }
                        attach_empirical(ctx, sel, row);
                    }
                    finish(row);
                    break;
                }
                case Algorithm::ms: {
                    MetricsRow row = base_row(ctx, rho, "ms");
                    const auto counts = ms_schedule(ctx.graph, cfg.slots_ms,
                                                    derive_seed(cfg.master_seed, {kStageMs, ctx.seed}));
                    row.alpha_empirical = alpha_ms(counts, cfg.slots_ms).ideal;
                    if (cfg.empirical) {
                        // Scheduled users are pairwise non-interfering, so each
                        // active user realizes its full capacity.
                        const int n = ctx.graph.num_vertices();
                        const std::vector<double> caps = effective_capacities(cfg, n);
                        double net = 0.0;
                        for (UserId u = 0; u < n; ++u) net += caps[u] * double(counts[u]);
                        net /= double(cfg.slots_ms);
                        row.net_lower = net;
                        row.net_upper = net;
                    }
                    finish(row);
                    break;
                }
                case Algorithm::conservative: {
                    MetricsRow row = base_row(ctx, rho, "conservative");
                    const SelectionResult sel = conservative_select(temp_graph(), ctx.graph, rho);
                    const AlphaReport a = alpha_conservative(sel, cfg.epsilon);
                    row.alpha_ideal = a.ideal;
                    row.alpha_eps = a.eps_scaled;
                    row.max_degree_grho = sel.consolidated.max_degree();
                    if (cfg.empirical) attach_empirical(ctx, sel, row);
                    finish(row);
                    break;
                }
                case Algorithm::aggressive: {
                    const SelectionResult sel = aggressive_centralized(temp_graph(), ctx.graph, rho);

                    MetricsRow row = base_row(ctx, rho, "aggressive");
                    if (rho == 0) {
                        // No topology information: Kuhn runs directly on G and
                        // the guarantee is the plain multicoloring bound.
                        const AlphaReport a = alpha_dc(ctx.graph);
                        row.alpha_ideal = a.ideal;
                        row.alpha_eps = (1.0 - cfg.epsilon) * a.ideal.value();
                    } else {
                        const AlphaReport a = alpha_aggressive_ratio(sel);
                        row.alpha_ideal = a.ideal;
                        row.alpha_eps = (1.0 - cfg.epsilon) * a.ideal.value();
                    }
                    row.max_degree_grho = sel.consolidated.max_degree();
                    if (cfg.empirical) attach_empirical(ctx, sel, row);
                    finish(row);

                    MetricsRow sum_row = base_row(ctx, rho, "aggressive_sum");
                    const AlphaReport s = alpha_aggressive_sum(sel, cfg.epsilon);
                    sum_row.alpha_ideal = s.ideal;
                    sum_row.alpha_eps = s.eps_scaled;
                    sum_row.max_degree_grho = sel.consolidated.max_degree();
                    rows.push_back(sum_row);
                    break;
                }
            }
        }
    }
    return rows;
}

std::string sanitize(std::string msg) {
    for (char& c : msg)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return msg;
}

}  // namespace

std::vector<MetricsRow> run_experiment(const ExperimentConfig& cfg, int jobs) {
    cfg.validate();
    const int reps = cfg.replications;
    std::vector<std::vector<MetricsRow>> buckets(reps);

    auto work = [&](int rep) {
        ReplicateContext ctx{cfg};
        ctx.seed = derive_seed(cfg.master_seed, {kStageGraph, std::uint64_t(rep)});
        try {
            if (cfg.gen.has_value()) {
                GenSpec spec = *cfg.gen;
                spec.seed = ctx.seed;
                ctx.graph = generate(spec);
                ctx.family = family_name(spec.family);
                ctx.params = spec.params_string();
            } else {
                ctx.graph = load_edge_list_file(cfg.graph_file);
                ctx.family = "file";
                ctx.params = sanitize(cfg.graph_file);
            }
            buckets[rep] = run_replicate(ctx);
        } catch (const std::exception& e) {
            MetricsRow row;
            row.family = cfg.gen.has_value() ? family_name(cfg.gen->family) : "file";
            row.n = cfg.gen.has_value() ? cfg.gen->n : 0;
            row.params = sanitize(e.what());
            row.seed = ctx.seed;
            row.rho = -1;
            row.epsilon = cfg.epsilon;
            row.algorithm = "error";
            buckets[rep] = {row};
        }
    };

    if (jobs <= 1) {
        for (int rep = 0; rep < reps; ++rep) work(rep);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> pool;
        const int nthreads = std::min(jobs, reps);
        pool.reserve(nthreads);
        for (int t = 0; t < nthreads; ++t) {
            pool.emplace_back([&]() {
                for (int rep = next.fetch_add(1); rep < reps; rep = next.fetch_add(1)) work(rep);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<MetricsRow> rows;
    for (auto& bucket : buckets)
        for (auto& row : bucket) rows.push_back(std::move(row));
    return rows;
}

std::string csv_header() {
    return "family,n,params,seed,rho,epsilon,algorithm,alpha_ideal_num,alpha_ideal_den,"
           "alpha_ideal,alpha_eps,alpha_empirical,net_lower,net_upper,max_degree_G,"
           "max_degree_Grho,runtime_ms";
}

namespace {
std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}
std::string fmt_eps(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}
}  // namespace

std::string rows_to_csv(const std::vector<MetricsRow>& rows) {
    std::ostringstream oss;
    oss << csv_header() << "\n";
    for (const MetricsRow& r : rows) {
        oss << r.family << ',' << r.n << ',' << r.params << ',' << r.seed << ',' << r.rho << ','
            << fmt_eps(r.epsilon) << ',' << r.algorithm << ',';
        if (r.alpha_ideal) {
            oss << r.alpha_ideal->num << ',' << r.alpha_ideal->den << ','
                << fmt(r.alpha_ideal->value()) << ',';
        } else {
            oss << ",,,";
        }
        oss << (r.alpha_eps ? fmt(*r.alpha_eps) : "") << ','
            << (r.alpha_empirical ? fmt(r.alpha_empirical->value()) : "") << ','
            << (r.net_lower ? fmt(*r.net_lower) : "") << ','
            << (r.net_upper ? fmt(*r.net_upper) : "") << ',' << r.max_degree_g << ','
            << (r.max_degree_grho ? std::to_string(*r.max_degree_grho) : "") << ','
            << r.runtime_ms << "\n";
    }
    return oss.str();
}

std::string rows_to_json(const std::vector<MetricsRow>& rows) {
    json arr = json::array();
    for (const MetricsRow& r : rows) {
        json j;
        j["family"] = r.family;
        j["n"] = r.n;
        j["params"] = r.params;
        j["seed"] = r.seed;
        j["rho"] = r.rho;
        j["epsilon"] = r.epsilon;
        j["algorithm"] = r.algorithm;
        if (r.alpha_ideal) {
            j["alpha_ideal_num"] = r.alpha_ideal->num;
            j["alpha_ideal_den"] = r.alpha_ideal->den;
            j["alpha_ideal"] = r.alpha_ideal->value();
        }
        if (r.alpha_eps) j["alpha_eps"] = *r.alpha_eps;
        if (r.alpha_empirical) j["alpha_empirical"] = r.alpha_empirical->value();
        if (r.net_lower) j["net_lower"] = *r.net_lower;
        if (r.net_upper) j["net_upper"] = *r.net_upper;
        j["max_degree_G"] = r.max_degree_g;
        if (r.max_degree_grho) j["max_degree_Grho"] = *r.max_degree_grho;
        j["runtime_ms"] = r.runtime_ms;
        arr.push_back(j);
    }
    return arr.dump(2);
}

ExperimentConfig config_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("config: invalid JSON: ") + e.what());
    }
    ExperimentConfig cfg;
    if (j.contains("gen")) {
        cfg.gen = gen_spec_from_json(j["gen"].dump());
    }
    if (j.contains("graph_file")) cfg.graph_file = j["graph_file"].get<std::string>();
    if (j.contains("rho")) cfg.rho = j["rho"].get<std::vector<int>>();
    if (j.contains("epsilon")) cfg.epsilon = j["epsilon"].get<double>();
    if (j.contains("algorithms")) {
        cfg.algorithms.clear();
        for (const auto& a : j["algorithms"])
            cfg.algorithms.push_back(algorithm_from_name(a.get<std::string>()));
    }
    if (j.contains("replications")) cfg.replications = j["replications"].get<int>();
    if (j.contains("master_seed")) cfg.master_seed = j["master_seed"].get<std::uint64_t>();
    if (j.contains("slots_ms")) cfg.slots_ms = j["slots_ms"].get<int>();
    if (j.contains("capacities")) {
        if (j["capacities"].is_number())
            cfg.default_capacity = j["capacities"].get<double>();
        else
            cfg.capacities = j["capacities"].get<std::vector<double>>();
    }
    if (j.contains("output")) cfg.output = j["output"].get<std::string>();
    if (j.contains("empirical")) cfg.empirical = j["empirical"].get<bool>();
    if (j.contains("nbar")) cfg.nbar = j["nbar"].get<int>();
    if (j.contains("max_k")) cfg.max_k = j["max_k"].get<int>();
    if (j.contains("record_runtime_ms")) cfg.record_runtime_ms = j["record_runtime_ms"].get<bool>();
    cfg.validate();
    return cfg;
}

std::string config_to_json(const ExperimentConfig& cfg) {
    json j;
    if (cfg.gen.has_value()) j["gen"] = json::parse(gen_spec_to_json(*cfg.gen));
    if (!cfg.graph_file.empty()) j["graph_file"] = cfg.graph_file;
    j["rho"] = cfg.rho;
    j["epsilon"] = cfg.epsilon;
    json algos = json::array();
    for (Algorithm a : cfg.algorithms) algos.push_back(algorithm_name(a));
    j["algorithms"] = algos;
    j["replications"] = cfg.replications;
    j["master_seed"] = cfg.master_seed;
    j["slots_ms"] = cfg.slots_ms;
    if (!cfg.capacities.empty())
        j["capacities"] = cfg.capacities;
    else if (cfg.default_capacity != 1.0)
        j["capacities"] = cfg.default_capacity;
    if (!cfg.output.empty()) j["output"] = cfg.output;
    j["empirical"] = cfg.empirical;
    if (cfg.nbar > 0) j["nbar"] = cfg.nbar;
    j["max_k"] = cfg.max_k;
    j["record_runtime_ms"] = cfg.record_runtime_ms;
    return j.dump(2);
}

namespace {

ExperimentConfig preset_config(GraphFamily family, int n, double p, int m, double d,
                               std::vector<int> rho, std::vector<Algorithm> algos, int reps,
                               bool empirical, std::uint64_t seed) {
    ExperimentConfig cfg;
    GenSpec spec;
    spec.family = family;
    spec.n = n;
    spec.p = p;
    spec.m = m;
    spec.d = d;
    cfg.gen = spec;
    cfg.rho = std::move(rho);
    cfg.algorithms = std::move(algos);
    cfg.replications = reps;
    cfg.empirical = empirical;
    cfg.master_seed = seed;
    return cfg;
}

std::vector<Preset> make_presets() {
    const std::vector<Algorithm> all = {Algorithm::dc, Algorithm::ms, Algorithm::conservative,
                                        Algorithm::aggressive};
    const std::vector<Algorithm> analytic = {Algorithm::conservative, Algorithm::aggressive};

    std::vector<Preset> presets;

    Preset exgraphs{"exgraphs",
                    "conservative vs aggressive alpha on the 20-node line-clique and line-star, "
                    "rho = 0..3",
                    {}};
    exgraphs.configs.push_back(preset_config(GraphFamily::line_clique, 20, 0, 1, 0, {0, 1, 2, 3},
                                             analytic, 1, false, 1));
    exgraphs.configs.push_back(preset_config(GraphFamily::line_star, 20, 0, 1, 0, {0, 1, 2, 3},
                                             analytic, 1, false, 1));
    presets.push_back(std::move(exgraphs));

    Preset comp{"randomalphacomp",
                "average alpha of DC/MS/Con/Agg at rho=1 over 100 replicates: G(20,p) for "
                "p=0.1/0.5/0.9, scale-free n=100 (m=1), geometric n=20 d=0.25/0.5",
                {}};
    comp.configs.push_back(preset_config(GraphFamily::erdos_renyi, 20, 0.1, 1, 0, {1}, all, 100, false, 2));
    comp.configs.push_back(preset_config(GraphFamily::erdos_renyi, 20, 0.5, 1, 0, {1}, all, 100, false, 2));
    comp.configs.push_back(preset_config(GraphFamily::erdos_renyi, 20, 0.9, 1, 0, {1}, all, 100, false, 2));
    comp.configs.push_back(preset_config(GraphFamily::barabasi_albert, 100, 0, 1, 0, {1}, all, 100, false, 2));
    comp.configs.push_back(preset_config(GraphFamily::geometric, 20, 0, 1, 0.25, {1}, all, 100, false, 2));
    comp.configs.push_back(preset_config(GraphFamily::geometric, 20, 0, 1, 0.5, {1}, all, 100, false, 2));
    presets.push_back(std::move(comp));

    auto net_preset = [&](std::string name, std::string desc, GraphFamily family, double p, double d,
                          std::vector<int> sizes) {
        Preset preset{std::move(name), std::move(desc), {}};
        for (int n : sizes)
            preset.configs.push_back(preset_config(family, n, p, 1, d, {1}, all, 100, true, 3));
        presets.push_back(std::move(preset));
    };
    net_preset("rg_p01_net", "net sum-rate bounds on G(n,0.1), n = 5/10/20",
               GraphFamily::erdos_renyi, 0.1, 0, {5, 10, 20});
    net_preset("rg_p09_net", "net sum-rate bounds on G(n,0.9), n = 5/10/20",
               GraphFamily::erdos_renyi, 0.9, 0, {5, 10, 20});
    net_preset("scalefree_net", "net sum-rate bounds on scale-free graphs (m=1), n = 25/50/100",
               GraphFamily::barabasi_albert, 0, 0, {25, 50, 100});
    net_preset("geo_d025_net", "net sum-rate bounds on geometric graphs d=0.25, n = 10/20/30",
               GraphFamily::geometric, 0, 0.25, {10, 20, 30});
    return presets;
}

}  // namespace

const std::vector<Preset>& figure_recipes() {
    static const std::vector<Preset> presets = make_presets();
    return presets;
}

const Preset& preset_by_name(const std::string& name) {
    for (const Preset& p : figure_recipes())
        if (p.name == name) return p;
    std::string known;
    for (const Preset& p : figure_recipes()) {
        if (!known.empty()) known += ", ";
        known += p.name;
    }
    throw std::invalid_argument("unknown preset '" + name + "' (available: " + known + ")");
}

}  // namespace subsched
