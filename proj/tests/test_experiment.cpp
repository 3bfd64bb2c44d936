#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include <sstream>

#include "subsched/experiment.hpp"
#include "subsched/io.hpp"

using namespace subsched;

namespace {
ExperimentConfig line_clique_config() {
    ExperimentConfig cfg;
    GenSpec spec;
    spec.family = GraphFamily::line_clique;
    spec.n = 20;
    cfg.gen = spec;
    cfg.rho = {0, 1, 2, 3};
    cfg.algorithms = {Algorithm::dc, Algorithm::conservative, Algorithm::aggressive};
    cfg.replications = 1;
    cfg.master_seed = 1;
    cfg.record_runtime_ms = false;
    return cfg;
}

const MetricsRow& find_row(const std::vector<MetricsRow>& rows, int rho, const std::string& algo) {
    for (const MetricsRow& r : rows)
        if (r.rho == rho && r.algorithm == algo) return r;
    REQUIRE(false);
    return rows.front();
}
}  // namespace

TEST_SUITE("cli-harness") {

TEST_CASE("line-clique experiment hits the exact alpha column") {
    const auto rows = run_experiment(line_clique_config());

    CHECK(find_row(rows, 0, "dc").alpha_ideal == Rational(1, 4));
    CHECK(find_row(rows, 0, "aggressive").alpha_ideal == Rational(1, 4));
    CHECK(find_row(rows, 1, "aggressive").alpha_ideal == Rational(2, 5));
    CHECK(find_row(rows, 2, "aggressive").alpha_ideal == Rational(3, 7));
    CHECK(find_row(rows, 3, "aggressive").alpha_ideal == Rational(4, 9));
    for (int rho : {1, 2, 3})
        CHECK(find_row(rows, rho, "conservative").alpha_ideal == Rational(1, 3));
    // the sum formula is recorded alongside every aggressive run
    CHECK(find_row(rows, 1, "aggressive_sum").alpha_ideal == Rational(11, 30));
}

TEST_CASE("deterministic bytes for a fixed config") {
    ExperimentConfig cfg = line_clique_config();
    const std::string a = rows_to_csv(run_experiment(cfg));
    const std::string b = rows_to_csv(run_experiment(cfg));
    CHECK(a == b);

    // parallel schedules change nothing
    cfg.replications = 8;
    cfg.gen->family = GraphFamily::erdos_renyi;
    cfg.gen->p = 0.4;
    cfg.rho = {1};
    cfg.empirical = true;
    cfg.nbar = 20;
    cfg.max_k = 500;
    cfg.algorithms = {Algorithm::dc, Algorithm::ms, Algorithm::conservative, Algorithm::aggressive};
    const std::string serial = rows_to_csv(run_experiment(cfg, 1));
    const std::string parallel = rows_to_csv(run_experiment(cfg, 4));
    CHECK(serial == parallel);
    CHECK(serial.find(",error,") == std::string::npos);
}

TEST_CASE("row accounting: every replicate appears") {
    ExperimentConfig cfg = line_clique_config();
    cfg.replications = 5;
    cfg.rho = {1};
    const auto rows = run_experiment(cfg);
    std::set<std::uint64_t> seeds;
    for (const auto& r : rows) seeds.insert(r.seed);
    CHECK(seeds.size() == 5);
    // dc + conservative + aggressive + aggressive_sum per replicate
    CHECK(rows.size() == 5 * 4);
}

TEST_CASE("config json round trip") {
    ExperimentConfig cfg = line_clique_config();
    cfg.empirical = true;
    cfg.nbar = 25;
    const ExperimentConfig back = config_from_json(config_to_json(cfg));
    CHECK(back.rho == cfg.rho);
    CHECK(back.algorithms == cfg.algorithms);
    CHECK(back.replications == cfg.replications);
    CHECK(back.master_seed == cfg.master_seed);
    CHECK(back.empirical == cfg.empirical);
    CHECK(back.nbar == cfg.nbar);
    CHECK(back.gen.has_value());
    CHECK(back.gen->family == GraphFamily::line_clique);
}

TEST_CASE("config validation rejects nonsense") {
    CHECK_THROWS_AS(config_from_json("{}"), std::invalid_argument);
    CHECK_THROWS_AS(config_from_json("not json"), std::invalid_argument);
    CHECK_THROWS_AS(
        config_from_json(R"({"gen":{"family":"line_clique","n":20},"epsilon":2.0})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        config_from_json(R"({"gen":{"family":"line_clique","n":20},"rho":[-1]})"),
        std::invalid_argument);
    CHECK_THROWS_AS(
        config_from_json(R"({"gen":{"family":"line_clique","n":20},"algorithms":["bogus"]})"),
        std::invalid_argument);
}

TEST_CASE("presets cover the figures and unknown names list them") {
    const auto& presets = figure_recipes();
    REQUIRE(presets.size() == 6);
    CHECK_NOTHROW(preset_by_name("exgraphs"));
    CHECK_NOTHROW(preset_by_name("rg_p09_net"));

    const Preset& comp = preset_by_name("randomalphacomp");
    REQUIRE(comp.configs.size() == 6);
    CHECK(comp.configs[0].gen->family == GraphFamily::erdos_renyi);
    CHECK(comp.configs[3].gen->family == GraphFamily::barabasi_albert);
    CHECK(comp.configs[3].gen->n == 100);
    CHECK(comp.configs[4].gen->d == 0.25);

    const Preset& p09 = preset_by_name("rg_p09_net");
    std::vector<int> sizes;
    for (const auto& c : p09.configs) sizes.push_back(c.gen->n);
    CHECK(sizes == std::vector<int>{5, 10, 20});

    CHECK_THROWS_WITH_AS(preset_by_name("nope"),
                         doctest::Contains("available: exgraphs"), std::invalid_argument);
}

TEST_CASE("error rows preserve the replicate count") {
    ExperimentConfig cfg;
    cfg.graph_file = "/nonexistent/graph.txt";
    cfg.rho = {1};
    cfg.algorithms = {Algorithm::dc};
    cfg.replications = 3;
    const auto rows = run_experiment(cfg);
    REQUIRE(rows.size() == 3);
    for (const auto& r : rows) CHECK(r.algorithm == "error");
}

TEST_CASE("csv shape") {
    const auto rows = run_experiment(line_clique_config());
    const std::string csv = rows_to_csv(rows);
    std::istringstream iss(csv);
    std::string header;
    std::getline(iss, header);
    CHECK(header ==
          "family,n,params,seed,rho,epsilon,algorithm,alpha_ideal_num,alpha_ideal_den,"
          "alpha_ideal,alpha_eps,alpha_empirical,net_lower,net_upper,max_degree_G,"
          "max_degree_Grho,runtime_ms");
    int lines = 0;
    for (std::string line; std::getline(iss, line);) {
        ++lines;
        CHECK(std::count(line.begin(), line.end(), ',') == 16);
    }
    CHECK(lines == static_cast<int>(rows.size()));
}

TEST_CASE("edge list round trip") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        const ConflictGraph g = erdos_renyi(15, 0.3, seed);
        std::ostringstream oss;
        save_edge_list(oss, g);
        std::istringstream iss(oss.str());
        CHECK(load_edge_list(iss) == g);
    }
}

TEST_CASE("edge list rejects malformed input") {
    auto loads = [](const std::string& text) {
        std::istringstream iss(text);
        return load_edge_list(iss);
    };
    CHECK_THROWS_AS(loads(""), std::invalid_argument);
    CHECK_THROWS_AS(loads("3\n1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(loads("3\n1 4\n"), std::invalid_argument);
    CHECK_THROWS_AS(loads("3\n1 2\n2 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(loads("3\n1\n"), std::invalid_argument);
    CHECK_NOTHROW(loads("3\n1 2\n"));
}

TEST_CASE("dot export labels are 1-based") {
    const std::string dot = to_dot(line_clique(4));
    CHECK(dot.find("1 -- 2") != std::string::npos);
    CHECK(dot.find("0") == std::string::npos);

    const ConflictGraph g = line_clique(6);
    const auto temp = build_temp_graph(g, enumerate_r_cliques(g, 1));
    const std::string cdot = to_dot(temp);
    CHECK(cdot.find("{4,5,6}") != std::string::npos);
}

TEST_CASE("selection json golden file") {
    const ConflictGraph g = line_clique(6);
    const auto sel = conservative_select(build_temp_graph(g, enumerate_r_cliques(g, 1)), g, 1);
    const char* golden = R"({
  "edges": [
    [
      0,
      1
    ],
    [
      0,
      2
    ]
  ],
  "kind": "conservative",
  "representation": {
    "1": [
      1
    ],
    "2": [
      1
    ],
    "3": [
      0
    ],
    "4": [
      2
    ],
    "5": [
      2
    ],
    "6": [
      2
    ]
  },
  "vertices": [
    {
      "members": [
        3
      ],
      "order": 0
    },
    {
      "members": [
        1,
        2
      ],
      "order": 1
    },
    {
      "members": [
        4,
        5,
        6
      ],
      "order": 1
    }
  ]
})";
    CHECK(selection_to_json(sel) == golden);
}

TEST_CASE("selection json shape") {
    const ConflictGraph g = line_clique(6);
    const auto sel = aggressive_centralized(build_temp_graph(g, enumerate_r_cliques(g, 1)), g, 1);
    const std::string json = selection_to_json(sel);
    CHECK(json.find("\"members\"") != std::string::npos);
    CHECK(json.find("\"representation\"") != std::string::npos);
    // 1-based member ids
    CHECK(json.find("6") != std::string::npos);
}

}  // TEST_SUITE
