#include "bullberge/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace bullberge {

namespace {

Graph parse_dimacs(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    int n = -1, m = -1, edges_seen = 0;
    Graph g;
    std::set<std::pair<int, int>> seen;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ls(line);
        char kind;
        ls >> kind;
        if (kind == 'p') {
            std::string fmt;
            if (!(ls >> fmt >> n >> m) || fmt != "edge" || n < 0)
                throw InputError("line " + std::to_string(lineno) + ": bad problem line: " + line);
            g = Graph(n);
        } else if (kind == 'e') {
            int u, v;
            if (n < 0) throw InputError("line " + std::to_string(lineno) + ": edge before problem line");
            if (!(ls >> u >> v))
                throw InputError("line " + std::to_string(lineno) + ": bad edge line: " + line);
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("line " + std::to_string(lineno) + ": vertex out of range");
            if (u == v) throw InputError("line " + std::to_string(lineno) + ": self-loop");
            auto key = std::minmax(u, v);
            if (!seen.insert(key).second)
                throw InputError("line " + std::to_string(lineno) + ": duplicate edge");
            g.add_edge(u - 1, v - 1);
            ++edges_seen;
        } else {
            throw InputError("line " + std::to_string(lineno) + ": unrecognized line: " + line);
        }
    }
    if (n < 0) throw InputError("missing problem line");
    if (m >= 0 && edges_seen != m)
        throw InputError("problem line announces " + std::to_string(m) + " edges but " +
                         std::to_string(edges_seen) + " given");
    return g;
}

Graph parse_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("json parse error: ") + e.what());
    }
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw InputError("json graph needs an integer field 'n'");
    Graph g(j["n"].get<int>());
    std::set<std::pair<int, int>> seen;
    for (const auto& e : j.value("edges", nlohmann::json::array())) {
        if (!e.is_array() || e.size() != 2) throw InputError("json edge must be a pair");
        int u = e[0].get<int>(), v = e[1].get<int>();
        g.check_vertex(u);
        g.check_vertex(v);
        if (u == v) throw InputError("json edge is a self-loop");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) throw InputError("duplicate json edge");
        g.add_edge(u, v);
    }
    return g;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::Dimacs ? parse_dimacs(text) : parse_json(text);
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
    if (format == GraphFormat::Dimacs) {
        std::ostringstream os;
        os << "p edge " << g.vertex_count() << ' ' << g.edge_count() << "\n";
        for (auto [u, v] : g.edges()) os << "e " << u + 1 << ' ' << v + 1 << "\n";
        return os.str();
    }
    nlohmann::json j;
    j["n"] = g.vertex_count();
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

std::optional<GraphFormat> guess_format(const std::string& filename, const std::string& text) {
    if (filename.size() >= 5 && filename.substr(filename.size() - 5) == ".json")
        return GraphFormat::Json;
    if (filename.size() >= 4 && filename.substr(filename.size() - 4) == ".col")
        return GraphFormat::Dimacs;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return GraphFormat::Json;
        if (c == 'c' || c == 'p' || c == 'e') return GraphFormat::Dimacs;
        break;
    }
    return std::nullopt;
}

std::vector<int> parse_weights(const Graph& g, const std::string& text) {
    std::vector<int> w(static_cast<std::size_t>(g.vertex_count()), 1);
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int v, weight;
        if (!(ls >> v >> weight) || weight < 0)
            throw InputError("weights line " + std::to_string(lineno) + " malformed: " + line);
        g.check_vertex(v);
        w[static_cast<std::size_t>(v)] = weight;
    }
    return w;
}

std::string serialize_weights(const std::vector<int>& w) {
    std::ostringstream os;
    for (std::size_t v = 0; v < w.size(); ++v) os << v << ' ' << w[v] << "\n";
    return os.str();
}

std::string to_dot(const Graph& g, const Orientation* o, const BoxPartition* bp) {
    static const char* palette[] = {"lightblue", "lightyellow", "lightpink",  "lightgreen",
                                    "orange",    "violet",      "lightcyan",  "wheat",
                                    "salmon",    "palegreen",   "lightgray",  "gold"};
    std::ostringstream os;
    os << (o ? "digraph" : "graph") << " g {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        os << "  " << v;
        if (bp) {
            int b = bp->box_index(v);
            os << " [style=filled fillcolor=" << palette[b % 12] << " label=\"" << v << "\\nB" << b
               << "\"]";
        }
        os << ";\n";
    }
    for (auto [u, v] : g.edges()) {
        if (o && o->oriented(u, v)) {
            int from = o->has(u, v) ? u : v, to = o->has(u, v) ? v : u;
            os << "  " << from << " -> " << to << " [label=\"" << to_string(o->provenance(from, to))
               << "\"];\n";
        } else if (o) {
            os << "  " << u << " -> " << v << " [dir=none];\n";
        } else {
            os << "  " << u << " -- " << v << ";\n";
        }
    }
    os << "}\n";
    return os.str();
}

}  // namespace bullberge
