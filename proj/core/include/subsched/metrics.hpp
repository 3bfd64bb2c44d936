#ifndef SUBSCHED_METRICS_HPP
#define SUBSCHED_METRICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "subsched/multicolor.hpp"
#include "subsched/rational.hpp"
#include "subsched/selection.hpp"

namespace subsched {

enum class AlphaFormula { dc, conservative, aggressive_sum, aggressive_ratio, empirical, migs };

std::string alpha_formula_name(AlphaFormula f);

/// A normalized sum-rate value.  `ideal` is the exact eps->0 limit;
/// `eps_scaled` carries the (1-eps) factor for the analytic formulas and
/// equals the ideal otherwise.
struct AlphaReport {
    Rational ideal;
    double eps_scaled = 0.0;
    AlphaFormula formula = AlphaFormula::dc;
};

/// Baseline: multicoloring the conflict graph directly, 1/(max degree + 1).
AlphaReport alpha_dc(const ConflictGraph& g);

/// Conservative bound 1/(max degree of the consolidated graph + 1).
AlphaReport alpha_conservative(const SelectionResult& sel, double eps);

/// Aggressive per-user bound: min over users of the sum of 1/(deg(w)+1) over
/// the vertices containing the user.
AlphaReport alpha_aggressive_sum(const SelectionResult& sel, double eps);

/// Aggressive closing formula: (min a(v)) / (max degree of the consolidated
/// graph), capped at 1; reports 1 when the consolidated graph has no edges.
AlphaReport alpha_aggressive_ratio(const SelectionResult& sel);

/// Realized rate from an actual schedule: min over users of the total slots
/// acquired by their vertices, over k.
AlphaReport alpha_empirical(const ColorAssignment& assign, const SelectionResult& sel);

/// Greedy maximal scheduler: per slot, draw a uniform node order and admit
/// every node none of whose neighbors is already admitted this slot.  All
/// users permanently backlogged.  Returns per-user active-slot counts.
std::vector<std::int64_t> ms_schedule(const ConflictGraph& g, int slots, std::uint64_t seed);

/// A single greedy slot from the given permutation source; the active set is
/// always a maximal independent set.  Exposed so per-slot audits can draw
/// from the same machinery as ms_schedule.
std::vector<char> ms_slot(const ConflictGraph& g, class Rng& rng);

/// Empirical normalized rate of the MS baseline: min over users of count/T.
AlphaReport alpha_ms(const std::vector<std::int64_t>& counts, int slots);

/// Per-slot-average net sum-rate window.  Every vertex holding a slot
/// contributes its members' capacities: divided by the sub-network size on
/// the time-sharing floor, in full when interference is fully managed.
struct NetRateBounds {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<double> capacities;
};

/// capacities may be empty (C_i = 1 for everyone) or one entry per user.
NetRateBounds net_rate_bounds(const ColorAssignment& assign, const SelectionResult& sel,
                              std::vector<double> capacities = {});

}  // namespace subsched

#endif
