#ifndef SUBSCHED_GENERATORS_HPP
#define SUBSCHED_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>

#include "subsched/graph.hpp"

namespace subsched {

enum class GraphFamily { line_clique, line_star, erdos_renyi, barabasi_albert, geometric };

std::string family_name(GraphFamily f);
GraphFamily family_from_name(const std::string& name);

/// Declarative description of one generated graph.  Every generator is a pure
/// function of its arguments including the seed.
struct GenSpec {
    GraphFamily family = GraphFamily::line_clique;
    int n = 0;
    double p = 0.5;            // erdos_renyi
    int m = 1;                 // barabasi_albert attachment count
    double d = 0.25;           // geometric interference diameter
    std::uint64_t seed = 0;

    void validate() const;
    /// Family-specific parameters as a short display string ("p=0.5", "m=1", ...).
    std::string params_string() const;
};

/// Path 1..N-2 with a triangle {N-2, N-1, N} attached; N >= 4, exactly N edges.
ConflictGraph line_clique(int n);

/// Path 1..N-2 with two leaves N-1 and N hanging off N-2; N >= 4, N-1 edges.
/// (line_clique minus the edge {N-1, N}.)
ConflictGraph line_star(int n);

/// G(n, p): each unordered pair {i, j}, i < j in lexicographic order, kept
/// independently with probability p.
ConflictGraph erdos_renyi(int n, double p, std::uint64_t seed);

/// Barabasi-Albert preferential attachment: seed clique on m+1 vertices, then
/// each new vertex attaches to m distinct existing vertices drawn
/// degree-weighted without replacement.
ConflictGraph barabasi_albert(int n, int m, std::uint64_t seed);

/// n transmitter-receiver pairs placed uniformly in the unit square; conflict
/// edge {i, j} when some transmitter of one pair is within distance d of the
/// other pair's receiver.
std::pair<InterferenceNetwork, ConflictGraph> geometric(int n, double d, std::uint64_t seed);

/// Dispatch on spec.family.  For geometric the conflict graph alone.
ConflictGraph generate(const GenSpec& spec);

}  // namespace subsched

#endif
