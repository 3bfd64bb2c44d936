#include "subsched/io.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace subsched {

using nlohmann::json;

ConflictGraph load_edge_list(std::istream& in) {
    int n = -1;
    if (!(in >> n) || n < 0) throw std::invalid_argument("edge list: missing or bad vertex count");
    std::vector<std::pair<UserId, UserId>> edges;
    std::set<std::pair<UserId, UserId>> seen;
    long long u, v;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling endpoint");
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge list: endpoint outside 1.." + std::to_string(n));
        if (u == v) throw std::invalid_argument("edge list: self-loop on " + std::to_string(u));
        const UserId a = UserId(std::min(u, v) - 1);
        const UserId b = UserId(std::max(u, v) - 1);
        if (!seen.insert({a, b}).second)
            throw std::invalid_argument("edge list: duplicate edge " + std::to_string(u) + " " +
                                        std::to_string(v));
        edges.emplace_back(UserId(u - 1), UserId(v - 1));
    }
    return ConflictGraph(n, edges);
}

ConflictGraph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return load_edge_list(in);
}

void save_edge_list(std::ostream& out, const ConflictGraph& g) {
    out << g.num_vertices() << "\n";
    for (auto [u, v] : g.edge_list()) out << u + 1 << " " << v + 1 << "\n";
}

std::string to_dot(const ConflictGraph& g) {
    std::ostringstream oss;
    oss << "graph G {\n";
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) oss << "  " << v + 1 << ";\n";
    for (auto [u, v] : g.edge_list()) oss << "  " << u + 1 << " -- " << v + 1 << ";\n";
    oss << "}\n";
    return oss.str();
}

namespace {
std::string clique_label(const CliqueVertex& w) {
    std::string s = "{";
    for (std::size_t i = 0; i < w.members.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(w.members[i] + 1);
    }
    return s + "}";
}
}  // namespace

std::string to_dot(const ConsolidatedGraph& cg) {
    std::ostringstream oss;
    oss << "graph G {\n";
    for (int i = 0; i < cg.num_vertices(); ++i)
        oss << "  w" << i << " [label=\"" << clique_label(cg.vertices[i]) << "\"];\n";
    for (auto [a, b] : cg.edge_list()) oss << "  w" << a << " -- w" << b << ";\n";
    oss << "}\n";
    return oss.str();
}

std::string gen_spec_to_json(const GenSpec& spec) {
    json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["seed"] = spec.seed;
    switch (spec.family) {
        case GraphFamily::erdos_renyi: j["p"] = spec.p; break;
        case GraphFamily::barabasi_albert: j["m"] = spec.m; break;
        case GraphFamily::geometric: j["d"] = spec.d; break;
        default: break;
    }
    return j.dump();
}

GenSpec gen_spec_from_json(const std::string& json_text) {
    const json j = json::parse(json_text);
    GenSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.n = j.at("n").get<int>();
    if (j.contains("p")) spec.p = j["p"].get<double>();
    if (j.contains("m")) spec.m = j["m"].get<int>();
    if (j.contains("d")) spec.d = j["d"].get<double>();
    if (j.contains("seed")) spec.seed = j["seed"].get<std::uint64_t>();
    spec.validate();
    return spec;
}

std::string selection_to_json(const SelectionResult& sel) {
    json j;
    j["kind"] = sel.kind == SelectionKind::conservative ? "conservative" : "aggressive";
    json verts = json::array();
    for (const CliqueVertex& w : sel.consolidated.vertices) {
        json members = json::array();
        for (UserId u : w.members) members.push_back(u + 1);
        verts.push_back({{"members", members}, {"order", w.order}});
    }
    j["vertices"] = verts;
    json edges = json::array();
    for (auto [a, b] : sel.consolidated.edge_list()) edges.push_back({a, b});
    j["edges"] = edges;
    json repr = json::object();
    for (UserId u : sel.scope) repr[std::to_string(u + 1)] = sel.representation[u];
    j["representation"] = repr;
    return j.dump(2);
}

std::string network_to_json(const InterferenceNetwork& net, const ConflictGraph& g) {
    json j;
    j["n"] = net.n;
    json tx = json::array(), rx = json::array();
    for (int i = 0; i < net.n; ++i) {
        tx.push_back({net.tx_pos[i].first, net.tx_pos[i].second});
        rx.push_back({net.rx_pos[i].first, net.rx_pos[i].second});
    }
    j["tx_pos"] = tx;
    j["rx_pos"] = rx;
    json links = json::array();
    for (auto [a, b] : net.links) links.push_back({a + 1, b + 1});
    j["links"] = links;
    json edges = json::array();
    for (auto [u, v] : g.edge_list()) edges.push_back({u + 1, v + 1});
    j["conflict_edges"] = edges;
    return j.dump(2);
}

}  // namespace subsched
