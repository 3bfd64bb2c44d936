#ifndef SUBSCHED_IO_HPP
#define SUBSCHED_IO_HPP

#include <iosfwd>
#include <string>

#include "subsched/cliques.hpp"
#include "subsched/generators.hpp"
#include "subsched/graph.hpp"
#include "subsched/selection.hpp"

namespace subsched {

/// Edge-list text format: first line `n`, then one `u v` pair per line,
/// 1-based, each undirected edge listed once.
ConflictGraph load_edge_list(std::istream& in);
ConflictGraph load_edge_list_file(const std::string& path);
void save_edge_list(std::ostream& out, const ConflictGraph& g);

/// DOT export with 1-based vertex labels.
std::string to_dot(const ConflictGraph& g);

/// DOT export of a clique graph; vertices labeled "{a,b,c}" with 1-based ids.
std::string to_dot(const ConsolidatedGraph& cg);

/// JSON round trip for generator specs ({"family","n","p","m","d","seed"}).
std::string gen_spec_to_json(const GenSpec& spec);
GenSpec gen_spec_from_json(const std::string& json_text);

/// Selection result as JSON: vertices as sorted 1-based member lists, edges
/// as vertex index pairs, plus the per-user representation.
std::string selection_to_json(const SelectionResult& sel);

/// Geometric network dump (positions, links) as JSON.
std::string network_to_json(const InterferenceNetwork& net, const ConflictGraph& g);

}  // namespace subsched

#endif
