#ifndef SUBSCHED_EXPERIMENT_HPP
#define SUBSCHED_EXPERIMENT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsched/generators.hpp"
#include "subsched/metrics.hpp"

namespace subsched {

enum class Algorithm { dc, ms, conservative, aggressive };

std::string algorithm_name(Algorithm a);
Algorithm algorithm_from_name(const std::string& name);

/// Declarative experiment description.  (config, master_seed) fully
/// determines the output bytes; per-replicate and per-stage seeds are hashed
/// out of master_seed so parallel execution cannot reorder randomness.
struct ExperimentConfig {
    std::optional<GenSpec> gen;        // generated graph per replicate, or ...
    std::string graph_file;            // ... a fixed graph loaded from disk
    std::vector<int> rho = {1};
    double epsilon = 0.3;
    std::vector<Algorithm> algorithms = {Algorithm::dc, Algorithm::aggressive};
    int replications = 1;
    std::uint64_t master_seed = 0;
    int slots_ms = 10000;              // T for the MS baseline
    double default_capacity = 1.0;     // C_i when no per-user list is given
    std::vector<double> capacities;    // per-user override of default_capacity
    std::string output;                // default CSV destination for the CLI
    bool empirical = false;            // run Step 3: empirical alpha + net bounds
    int nbar = 0;                      // upper bound on N known to nodes; 0 => max(n,2)
    int max_k = 20000;                 // slot-count cap (coherence-time stand-in)
    bool record_runtime_ms = true;     // false pins runtime_ms to 0 for byte-stable reruns

    void validate() const;
};

/// One CSV row: (graph replicate, rho, algorithm).  The aggressive algorithm
/// emits a second row, algorithm "aggressive_sum", carrying its per-user-sum
/// formula next to the min-a/Delta row.
struct MetricsRow {
    std::string family;
    int n = 0;
    std::string params;
    std::uint64_t seed = 0;
    int rho = 0;
    double epsilon = 0.0;
    std::string algorithm;
    std::optional<Rational> alpha_ideal;
    std::optional<double> alpha_eps;
    std::optional<Rational> alpha_empirical;
    std::optional<double> net_lower;
    std::optional<double> net_upper;
    int max_degree_g = 0;
    std::optional<int> max_degree_grho;
    std::int64_t runtime_ms = 0;
};

/// Runs every (replicate, rho, algorithm) combination.  Replicates execute
/// concurrently when jobs > 1; rows come back in deterministic
/// (replicate, rho, algorithm) order regardless of completion order.  A
/// failed replicate contributes a single algorithm="error" row instead of
/// disappearing.
std::vector<MetricsRow> run_experiment(const ExperimentConfig& cfg, int jobs = 1);

std::string csv_header();
std::string rows_to_csv(const std::vector<MetricsRow>& rows);
std::string rows_to_json(const std::vector<MetricsRow>& rows);

ExperimentConfig config_from_json(const std::string& text);
std::string config_to_json(const ExperimentConfig& cfg);

/// Named experiment presets mirroring the evaluation figures.
struct Preset {
    std::string name;
    std::string description;
    std::vector<ExperimentConfig> configs;
};

const std::vector<Preset>& figure_recipes();

/// Lookup by name; unknown names raise an error listing the presets.
const Preset& preset_by_name(const std::string& name);

}  // namespace subsched

#endif
