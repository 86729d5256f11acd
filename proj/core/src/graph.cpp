#include "bullberge/graph.hpp"

#include <algorithm>
#include <sstream>

namespace bullberge {

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    InducedSubgraph out;
    out.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int v : s) {
        g.check_vertex(v);
        out.from_parent[static_cast<std::size_t>(v)] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()));
    for (std::size_t i = 0; i < out.to_parent.size(); ++i)
        for (std::size_t j = i + 1; j < out.to_parent.size(); ++j)
            if (g.adjacent(out.to_parent[i], out.to_parent[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    Graph c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

Graph remove_vertex(const Graph& g, int v, std::vector<int>* to_parent) {
    g.check_vertex(v);
    VertexSet keep = g.vertices();
    keep.remove(v);
    InducedSubgraph sub = induced_subgraph(g, keep);
    if (to_parent) *to_parent = sub.to_parent;
    return sub.graph;
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s) {
    std::vector<VertexSet> out;
    VertexSet todo = s;
    while (!todo.empty()) {
        int start = todo.first();
        VertexSet comp = VertexSet::single(start);
        VertexSet frontier = comp;
        todo.remove(start);
        while (!frontier.empty()) {
            VertexSet next;
            for (int v : frontier) next |= g.neighbors(v) & todo;
            todo -= next;
            comp |= next;
            frontier = next;
        }
        out.push_back(comp);
    }
    return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    return connected_components(g, g.vertices());
}

namespace {

void chordless_dfs(const Graph& g, int b, int max_len, std::vector<int>& path, VertexSet on_path,
                   VertexSet forbidden, std::vector<std::vector<int>>& out) {
    int tail = path.back();
    if (tail == b) {
        out.push_back(path);
        return;
    }
    if (static_cast<int>(path.size()) - 1 >= max_len) return;
    // Candidates: adjacent to the tail, not adjacent to any earlier path
    // vertex (that adjacency would be a chord).
    VertexSet cand = g.neighbors(tail) - on_path - forbidden;
    for (int w : cand) {
        path.push_back(w);
        VertexSet nf = forbidden | (g.neighbors(tail) - VertexSet::single(w));
        chordless_dfs(g, b, max_len, path, on_path | VertexSet::single(w), nf, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> chordless_paths(const Graph& g, int a, int b, int max_len) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw InputError("chordless_paths requires distinct endpoints");
    std::vector<std::vector<int>> out;
    if (max_len < 1) return out;
    if (g.adjacent(a, b)) {
        // Any longer sequence would carry the ab chord.
        out.push_back({a, b});
        return out;
    }
    std::vector<int> path{a};
    chordless_dfs(g, b, max_len, path, VertexSet::single(a), VertexSet{}, out);
    return out;
}

bool is_clique(const Graph& g, const VertexSet& s) {
    for (int u : s)
        for (int v : s)
            if (u < v && !g.adjacent(u, v)) return false;
    return true;
}

bool is_stable_set(const Graph& g, const VertexSet& s) {
    for (int u : s)
        for (int v : s)
            if (u < v && g.adjacent(u, v)) return false;
    return true;
}

VertexSet partial_vertices(const Graph& g, const VertexSet& b) {
    VertexSet out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (b.contains(v)) continue;
        if (g.partial_on(v, b)) out.add(v);
    }
    return out;
}

VertexSet set_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out;
    for (int v : s) out |= g.neighbors(v);
    return out - s;
}

std::string format_vertices(const VertexSet& s) {
    return format_vertices(s.to_vector());
}

std::string format_vertices(const std::vector<int>& vs) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) os << ',';
        os << vs[i];
    }
    os << '}';
    return os.str();
}

}  // namespace bullberge
