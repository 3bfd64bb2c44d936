#include "subsched/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include "subsched/rng.hpp"

namespace subsched {

std::string alpha_formula_name(AlphaFormula f) {
    switch (f) {
        case AlphaFormula::dc: return "dc";
        case AlphaFormula::conservative: return "conservative";
        case AlphaFormula::aggressive_sum: return "aggressive_sum";
        case AlphaFormula::aggressive_ratio: return "aggressive_ratio";
        case AlphaFormula::empirical: return "empirical";
        case AlphaFormula::migs: return "migs";
    }
    throw std::logic_error("unknown alpha formula");
}

namespace {
AlphaReport make_report(Rational ideal, double eps, AlphaFormula formula) {
    AlphaReport r;
    r.ideal = ideal;
    r.eps_scaled = (1.0 - eps) * ideal.value();
    r.formula = formula;
    return r;
}
}  // namespace

AlphaReport alpha_dc(const ConflictGraph& g) {
    return make_report(Rational(1, g.max_degree() + 1), 0.0, AlphaFormula::dc);
}

AlphaReport alpha_conservative(const SelectionResult& sel, double eps) {
    return make_report(Rational(1, sel.consolidated.max_degree() + 1), eps,
                       AlphaFormula::conservative);
}

AlphaReport alpha_aggressive_sum(const SelectionResult& sel, double eps) {
    Rational best(1, 1);
    bool first = true;
    for (UserId u : sel.scope) {
        if (sel.representation[u].empty())
            throw std::invalid_argument("alpha_aggressive_sum: user " + std::to_string(u + 1) +
                                        " has a(v)=0");
        Rational sum(0, 1);
        for (int w : sel.representation[u]) sum = sum + Rational(1, sel.consolidated.degree(w) + 1);
        best = first ? sum : min(best, sum);
        first = false;
    }
    return make_report(best, eps, AlphaFormula::aggressive_sum);
}

AlphaReport alpha_aggressive_ratio(const SelectionResult& sel) {
    const int delta = sel.consolidated.max_degree();
    if (delta == 0) return make_report(Rational(1, 1), 0.0, AlphaFormula::aggressive_ratio);
    int min_a = -1;
    for (UserId u : sel.scope) {
        const int a = sel.appearance_count(u);
        if (a == 0)
            throw std::invalid_argument("alpha_aggressive_ratio: user " + std::to_string(u + 1) +
                                        " has a(v)=0");
        min_a = min_a < 0 ? a : std::min(min_a, a);
    }
    Rational ratio(min_a, delta);
    if (Rational(1, 1) < ratio) ratio = Rational(1, 1);
    return make_report(ratio, 0.0, AlphaFormula::aggressive_ratio);
}

AlphaReport alpha_empirical(const ColorAssignment& assign, const SelectionResult& sel) {
    Rational best(1, 1);
    bool first = true;
    for (UserId u : sel.scope) {
        std::int64_t total = 0;
        for (int w : sel.representation[u]) total += static_cast<std::int64_t>(assign.acquired[w].size());
        const Rational share(total, assign.k > 0 ? assign.k : 1);
        best = first ? share : min(best, share);
        first = false;
    }
    return make_report(best, 0.0, AlphaFormula::empirical);
}

std::vector<char> ms_slot(const ConflictGraph& g, Rng& rng) {
    const int n = g.num_vertices();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.bounded(std::uint64_t(i) + 1)]);
    std::vector<char> active(n, 0);
    for (int u : perm) {
        bool blocked = false;
        for (UserId x : g.neighbors(u)) blocked = blocked || active[x];
        if (!blocked) active[u] = 1;
    }
    return active;
}

std::vector<std::int64_t> ms_schedule(const ConflictGraph& g, int slots, std::uint64_t seed) {
    if (slots < 1) throw std::invalid_argument("ms_schedule: slots must be >= 1");
    const int n = g.num_vertices();
    Rng rng(derive_seed(seed, {0x4d53u}));  // "MS" stream

    std::vector<std::int64_t> counts(n, 0);
    for (int t = 0; t < slots; ++t) {
        const std::vector<char> active = ms_slot(g, rng);
        for (int u = 0; u < n; ++u) counts[u] += active[u];
    }
    return counts;
}

AlphaReport alpha_ms(const std::vector<std::int64_t>& counts, int slots) {
    if (slots < 1) throw std::invalid_argument("alpha_ms: slots must be >= 1");
    std::int64_t lo = counts.empty() ? slots : counts.front();
    for (std::int64_t c : counts) lo = std::min(lo, c);
    return make_report(Rational(lo, slots), 0.0, AlphaFormula::migs);
}

NetRateBounds net_rate_bounds(const ColorAssignment& assign, const SelectionResult& sel,
                              std::vector<double> capacities) {
    const int n = sel.consolidated.origin_n;
    if (capacities.empty()) capacities.assign(n, 1.0);
    if (static_cast<int>(capacities.size()) != n)
        throw std::invalid_argument("net_rate_bounds: need one capacity per user");

    NetRateBounds out;
    out.capacities = std::move(capacities);
    if (assign.k <= 0) return out;
    for (int w = 0; w < sel.consolidated.num_vertices(); ++w) {
        const auto& members = sel.consolidated.vertices[w].members;
        double cap_sum = 0.0;
        for (UserId u : members) cap_sum += out.capacities[u];
        const double slots_held = double(assign.acquired[w].size());
        out.lower += slots_held * cap_sum / double(members.size());
        out.upper += slots_held * cap_sum;
    }
    out.lower /= double(assign.k);
    out.upper /= double(assign.k);
    return out;
}

}  // namespace subsched
