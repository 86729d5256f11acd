#include "bullberge/decomposition.hpp"

#include <algorithm>
#include <sstream>

namespace bullberge {

HomogeneousCheck is_homogeneous(const Graph& g, const VertexSet& h) {
    HomogeneousCheck out;
    const int n = g.vertex_count();
    if (h.size() < 2 || h.size() >= n) return out;
    for (int v = 0; v < n; ++v) {
        if (h.contains(v)) continue;
        if (g.partial_on(v, h)) {
            out.partial_witness = v;
            return out;
        }
    }
    out.homogeneous = true;
    return out;
}

namespace {

// Smallest homogeneous-set candidate containing {u,v}: grow by absorbing any
// outside vertex partial on the current set.
VertexSet pair_closure(const Graph& g, int u, int v) {
    VertexSet s = VertexSet::of({u, v});
    bool grew = true;
    while (grew) {
        grew = false;
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (s.contains(w)) continue;
            if (g.partial_on(w, s)) {
                s.add(w);
                grew = true;
            }
        }
    }
    return s;
}

std::vector<VertexSet> keep_at_least_two(std::vector<VertexSet> sets) {
    std::vector<VertexSet> out;
    for (auto& s : sets)
        if (s.size() >= 2) out.push_back(s);
    return out;
}

}  // namespace

std::vector<VertexSet> maximal_homogeneous_sets(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3) return {};

    auto comps = connected_components(g);
    if (comps.size() > 1) return keep_at_least_two(std::move(comps));
    auto cocomps = connected_components(complement(g));
    if (cocomps.size() > 1) return keep_at_least_two(std::move(cocomps));

    // g and its complement are connected: maximal proper homogeneous sets are
    // pairwise disjoint. Pair closures may stop below them (twin classes of
    // three or more), so overlapping maximal closures are merged.
    std::vector<VertexSet> closures;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            VertexSet c = pair_closure(g, u, v);
            if (c.size() < n) closures.push_back(c);
        }
    std::sort(closures.begin(), closures.end());
    closures.erase(std::unique(closures.begin(), closures.end()), closures.end());
    std::vector<VertexSet> maximal;
    for (const auto& c : closures) {
        bool dominated = false;
        for (const auto& d : closures)
            if (!(c == d) && c.is_subset_of(d)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(c);
    }
    bool merged = true;
    while (merged) {
        merged = false;
        for (std::size_t i = 0; i < maximal.size() && !merged; ++i)
            for (std::size_t j = i + 1; j < maximal.size() && !merged; ++j)
                if (maximal[i].intersects(maximal[j])) {
                    maximal[i] |= maximal[j];
                    maximal.erase(maximal.begin() + static_cast<std::ptrdiff_t>(j));
                    merged = true;
                }
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    for (std::size_t i = 0; i < maximal.size(); ++i) {
        if (maximal[i].size() >= n)
            throw InternalError("maximal homogeneous set is not proper");
        if (!is_homogeneous(g, maximal[i]).homogeneous)
            throw InternalError("computed maximal set " + format_vertices(maximal[i]) +
                                " is not homogeneous");
        for (std::size_t j = i + 1; j < maximal.size(); ++j)
            if (maximal[i].intersects(maximal[j]))
                throw InternalError("maximal homogeneous sets overlap: " +
                                    format_vertices(maximal[i]) + " vs " +
                                    format_vertices(maximal[j]));
    }
    return maximal;
}

Graph f_graph(FKind kind) {
    if (kind == FKind::F1) {
        // bull u1-u2u5u3-u4
        return Graph::from_edges(5, {{0, 1}, {1, 4}, {1, 2}, {4, 2}, {2, 3}});
    }
    // lock: C4 u1u2u3u4, u5 dominating it, u6 on u1,u2
    return Graph::from_edges(
        6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 0}, {4, 1}, {4, 2}, {4, 3}, {0, 5}, {1, 5}});
}

BlueRedCount classify_partial_vertex(FKind kind, const VertexSet& nbrs) {
    Graph w = f_graph(kind);
    const int m = w.vertex_count();
    VertexSet full = w.vertices();
    if (nbrs.empty() || !nbrs.is_subset_of(full) || nbrs == full)
        throw InputError("classify_partial_vertex: neighborhood must be nonempty and proper");
    BlueRedCount out;
    // blue: triple with a single edge; p on exactly one endpoint of that edge
    // and off the isolated vertex.
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                int e = (w.adjacent(i, j) ? 1 : 0) + (w.adjacent(i, k) ? 1 : 0) +
                        (w.adjacent(j, k) ? 1 : 0);
                if (e != 1) continue;
                int e1, e2, iso;
                if (w.adjacent(i, j)) e1 = i, e2 = j, iso = k;
                else if (w.adjacent(i, k)) e1 = i, e2 = k, iso = j;
                else e1 = j, e2 = k, iso = i;
                if (nbrs.contains(iso)) continue;
                if (nbrs.contains(e1) != nbrs.contains(e2)) ++out.blue;
            }
    // red: chordless path u-v-w with p seeing u,v and missing w.
    for (int v = 0; v < m; ++v)
        for (int u : w.neighbors(v))
            for (int t : w.neighbors(v)) {
                if (u >= t || w.adjacent(u, t)) continue;
                bool red1 = nbrs.contains(u) && nbrs.contains(v) && !nbrs.contains(t);
                bool red2 = nbrs.contains(t) && nbrs.contains(v) && !nbrs.contains(u);
                if (red1) ++out.red;
                if (red2) ++out.red;
            }
    return out;
}

SpikedDecomposition homogeneous_from_spiked(const Graph& g, const StructureWitness& witness) {
    if (witness.kind != StructureKind::SpikedF1 && witness.kind != StructureKind::SpikedF2)
        throw InputError("homogeneous_from_spiked: witness is not a spiked F");
    SpikedDecomposition out;
    out.kind = witness.kind == StructureKind::SpikedF1 ? FKind::F1 : FKind::F2;
    const int wsize = out.kind == FKind::F1 ? 5 : 6;
    if (static_cast<int>(witness.vertices.size()) != wsize + 2)
        throw InputError("homogeneous_from_spiked: malformed witness");
    std::vector<int> labels(witness.vertices.begin(), witness.vertices.begin() + wsize);
    out.a = witness.vertices[static_cast<std::size_t>(wsize)];
    out.b = witness.vertices[static_cast<std::size_t>(wsize + 1)];
    for (int v : labels) out.w.add(v);

    // Sanity of the witness itself.
    Graph f = f_graph(out.kind);
    for (int i = 0; i < wsize; ++i)
        for (int j = i + 1; j < wsize; ++j)
            if (g.adjacent(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(j)]) !=
                f.adjacent(i, j))
                throw InputError("homogeneous_from_spiked: W does not induce the claimed F");
    if (!g.sees_all(out.a, out.w) || !g.adjacent(out.a, out.b) || !g.misses_all(out.b, out.w))
        throw InputError("homogeneous_from_spiked: a/b do not match the spiked pattern");

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (out.w.contains(v)) continue;
        if (g.sees_all(v, out.w)) out.t.add(v);
        else if (g.misses_all(v, out.w)) out.z.add(v);
        else out.p.add(v);
    }
    for (int v : out.p) {
        if (is_stable_set(g, g.neighbors(v) & out.w)) out.p1.add(v);
        else out.p2.add(v);
    }
    for (int v : out.t)
        if (g.neighbors(v).intersects(out.z)) out.a_set.add(v);

    // X: forward closure from P through Z.
    VertexSet frontier = out.p;
    while (true) {
        VertexSet next = (set_neighborhood(g, frontier) & out.z) - out.x_set;
        if (next.empty()) break;
        out.x_set |= next;
        frontier = next;
    }
    // Y: closure from P + X through T - A along complement edges.
    VertexSet t_minus_a = out.t - out.a_set;
    VertexSet reach = out.p | out.x_set;
    bool grew = true;
    while (grew) {
        grew = false;
        for (int y : t_minus_a) {
            if (out.y_set.contains(y)) continue;
            for (int f2 : reach)
                if (!g.adjacent(y, f2)) {
                    out.y_set.add(y);
                    reach.add(y);
                    grew = true;
                    break;
                }
        }
    }
    out.h = out.w | out.p | out.x_set | out.y_set;

    VertexSet t_minus_y = out.t - out.y_set;
    for (int h : out.h)
        for (int t : t_minus_y)
            if (!g.adjacent(h, t))
                throw StructureError("claim (7) fails: " + std::to_string(h) + " in H misses " +
                                     std::to_string(t) + " in T-Y; input not in the lemma's class");
    for (int h : out.h)
        for (int zz : out.z - out.x_set)
            if (g.adjacent(h, zz))
                throw StructureError("claim (8) fails: " + std::to_string(h) + " in H sees " +
                                     std::to_string(zz) + " in Z-X; input not in the lemma's class");
    if (t_minus_y.empty())
        throw StructureError("T - Y is empty; H would not be proper");
    if (!is_homogeneous(g, out.h).homogeneous)
        throw StructureError("constructed H " + format_vertices(out.h) + " is not homogeneous");
    return out;
}

Substitution substitute_clique(const Graph& g, const VertexSet& h, int k) {
    if (k < 1) throw InputError("substitute_clique: k must be >= 1");
    if (!is_homogeneous(g, h).homogeneous)
        throw InputError("substitute_clique: set is not homogeneous");
    const int n = g.vertex_count();
    Substitution out;
    out.h = h;
    out.kept_to_new.assign(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v)
        if (!h.contains(v)) out.kept_to_new[static_cast<std::size_t>(v)] = next++;
    out.graph = Graph(next + k);
    for (int i = 0; i < k; ++i) out.clique.push_back(next + i);
    for (int u = 0; u < n; ++u) {
        if (h.contains(u)) continue;
        for (int v : g.neighbors(u))
            if (!h.contains(v) && u < v)
                out.graph.add_edge(out.kept_to_new[static_cast<std::size_t>(u)],
                                   out.kept_to_new[static_cast<std::size_t>(v)]);
    }
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) out.graph.add_edge(out.clique[static_cast<std::size_t>(i)], out.clique[static_cast<std::size_t>(j)]);
    // Outside neighborhood of h is uniform; read it off any member.
    int rep = h.first();
    for (int v : g.neighbors(rep))
        if (!h.contains(v))
            for (int q : out.clique) out.graph.add_edge(out.kept_to_new[static_cast<std::size_t>(v)], q);
    return out;
}

Coloring merge_colorings(const Graph& g, const Coloring& outer, const Coloring& inner,
                         const Substitution& sub, const InducedSubgraph& hs) {
    const int k = static_cast<int>(sub.clique.size());
    if (inner.count() != k)
        throw InternalError("merge_colorings: inner coloring uses " + std::to_string(inner.count()) +
                            " colors but Q(H) has " + std::to_string(k) + " vertices");
    Coloring out;
    out.classes.assign(static_cast<std::size_t>(outer.count()), VertexSet{});
    for (int v = 0; v < g.vertex_count(); ++v) {
        int color;
        if (sub.h.contains(v)) {
            int inner_color = inner.color_of(hs.from_parent[static_cast<std::size_t>(v)]);
            color = outer.color_of(sub.clique[static_cast<std::size_t>(inner_color)]);
        } else {
            color = outer.color_of(sub.kept_to_new[static_cast<std::size_t>(v)]);
        }
        out.classes[static_cast<std::size_t>(color)].add(v);
    }
    // Drop classes that ended up empty (colors used only inside Q(H) slack).
    std::vector<VertexSet> packed;
    for (auto& cls : out.classes)
        if (!cls.empty()) packed.push_back(cls);
    out.classes = std::move(packed);
    if (!out.proper_cover(g)) throw InternalError("merge_colorings produced an improper coloring");
    return out;
}

}  // namespace bullberge
