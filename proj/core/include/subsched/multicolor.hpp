#ifndef SUBSCHED_MULTICOLOR_HPP
#define SUBSCHED_MULTICOLOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subsched/cliques.hpp"

namespace subsched {

/// Color vector entries live in {1, ..., k*Nbar^4}, which overflows 64 bits
/// already at Nbar = 10^4 with large k; 128-bit entries hold every desk-scale
/// configuration exactly and keep the acquisition rule in integer arithmetic.
using ColorValue = unsigned __int128;

struct ColorVector {
    std::vector<ColorValue> values;  // length k
};

/// Per-vertex acquired slots out of k (0-based slot indices, ascending).
struct ColorAssignment {
    int k = 0;
    std::vector<std::vector<int>> acquired;  // indexed like ConsolidatedGraph vertices
};

/// Slot count k = ceil(6(Nbar+1)ln(Nbar)/eps^2).  Requires Nbar >= 2 and
/// 0 < eps < 1.
int kuhn_k(int nbar, double eps);

/// One uniform vector per user, entries in {1, ..., k*Nbar^4}.  Each user
/// draws from a substream derived from (seed, user), so the result does not
/// depend on evaluation order.  Rejects n_users > nbar.
std::vector<ColorVector> draw_vectors(int n_users, int k, int nbar, std::uint64_t seed);

/// Every clique vertex adopts the vector of its smallest member id.
std::vector<ColorVector> assign_clique_vectors(const ConsolidatedGraph& cg,
                                               const std::vector<ColorVector>& user_vectors);

/// One-shot multicoloring: vertex w acquires slot i when its entry beats
/// every neighbor's entry i.  Equal entries (possible when two adjacent
/// vertices share their smallest member) are broken by lexicographic
/// member-list order, which every local view can evaluate and which keeps
/// the coloring proper.
ColorAssignment multicolor(const ConsolidatedGraph& cg, const std::vector<ColorVector>& vertex_vectors);

/// First properness violation (two adjacent vertices holding one slot), or
/// nullopt.
std::optional<std::string> verify_proper_coloring(const ConsolidatedGraph& cg,
                                                  const ColorAssignment& assign);

}  // namespace subsched

#endif
