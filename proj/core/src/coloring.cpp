#include "bullberge/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "bullberge/decomposition.hpp"

namespace bullberge {

int Coloring::color_of(int v) const {
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i].contains(v)) return static_cast<int>(i);
    throw InternalError("vertex " + std::to_string(v) + " is uncolored");
}

bool Coloring::proper_cover(const Graph& g) const {
    VertexSet seen;
    for (const auto& cls : classes) {
        if (!is_stable_set(g, cls)) return false;
        if (seen.intersects(cls)) return false;
        seen |= cls;
    }
    return seen == g.vertices();
}

long long WeightedColoring::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0LL);
}

bool WeightedColoring::feasible(const Graph& g, const std::vector<int>& w) const {
    if (classes.size() != weights.size()) return false;
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (weights[i] < 0 || !is_stable_set(g, classes[i])) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        long long cover = 0;
        for (std::size_t i = 0; i < classes.size(); ++i)
            if (classes[i].contains(v)) cover += weights[i];
        if (cover < w[static_cast<std::size_t>(v)]) return false;
    }
    return true;
}

std::string to_string(TraceNode::Branch b) {
    using B = TraceNode::Branch;
    switch (b) {
        case B::Homogeneous: return "homogeneous";
        case B::WeaklyChordal: return "weakly-chordal";
        case B::BoxOrientation: return "box-orientation";
        case B::SensitivePeel: return "sensitive-peel";
        case B::BaseCase: return "base-case";
    }
    return "?";
}

std::string format_trace(const TraceNode& t, int indent) {
    std::ostringstream os;
    os << std::string(static_cast<std::size_t>(indent) * 2, ' ') << to_string(t.branch);
    if (!t.detail.empty()) os << ": " << t.detail;
    os << "\n";
    for (const auto& c : t.children) os << format_trace(c, indent + 1);
    return os.str();
}

// ---- oracles ---------------------------------------------------------------

namespace {

void bron_kerbosch(const Graph& g, VertexSet r, VertexSet p, VertexSet x, int& best,
                   VertexSet& best_set) {
    if (p.empty() && x.empty()) {
        if (r.size() > best) {
            best = r.size();
            best_set = r;
        }
        return;
    }
    if (r.size() + p.size() <= best) return;
    int pivot = -1, pivot_deg = -1;
    for (int v : p | x) {
        int d = (p & g.neighbors(v)).size();
        if (d > pivot_deg) pivot_deg = d, pivot = v;
    }
    for (int v : p - g.neighbors(pivot)) {
        bron_kerbosch(g, r | VertexSet::single(v), p & g.neighbors(v), x & g.neighbors(v), best,
                      best_set);
        p.remove(v);
        x.add(v);
    }
}

}  // namespace

std::pair<int, VertexSet> oracle_clique(const Graph& g) {
    if (g.vertex_count() == 0) return {0, VertexSet{}};
    int best = 0;
    VertexSet best_set;
    bron_kerbosch(g, VertexSet{}, g.vertices(), VertexSet{}, best, best_set);
    return {best, best_set};
}

namespace {

struct ChromSearch {
    const Graph& g;
    std::vector<int> order;
    std::vector<int> assign;  // order index -> color
    int best;
    std::vector<int> best_assign;

    void run(std::size_t idx, int used) {
        if (used >= best) return;
        if (idx == order.size()) {
            best = used;
            best_assign = assign;
            return;
        }
        int v = order[idx];
        for (int c = 0; c <= used && c < best - 1; ++c) {
            bool ok = true;
            for (std::size_t j = 0; j < idx && ok; ++j)
                if (assign[j] == c && g.adjacent(order[j], v)) ok = false;
            if (!ok) continue;
            assign[idx] = c;
            run(idx + 1, std::max(used, c + 1));
        }
        assign[idx] = -1;
    }
};

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    Coloring out;
    for (int v : order) {
        bool placed = false;
        for (auto& cls : out.classes) {
            if (!cls.intersects(g.neighbors(v))) {
                cls.add(v);
                placed = true;
                break;
            }
        }
        if (!placed) out.classes.push_back(VertexSet::single(v));
    }
    return out;
}

}  // namespace

std::pair<int, Coloring> oracle_chromatic(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n > cap)
        throw InputError("oracle_chromatic: " + std::to_string(n) + " vertices exceed the cap of " +
                         std::to_string(cap));
    if (n == 0) return {0, Coloring{}};

    auto [omega, clique] = oracle_clique(g);
    std::vector<int> order = clique.to_vector();
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (!clique.contains(v)) rest.push_back(v);
    std::sort(rest.begin(), rest.end(), [&](int a, int b) {
        return g.degree(a) != g.degree(b) ? g.degree(a) > g.degree(b) : a < b;
    });
    order.insert(order.end(), rest.begin(), rest.end());

    Coloring greedy = greedy_coloring(g, order);
    if (greedy.count() == omega) return {omega, greedy};

    ChromSearch s{g, order, std::vector<int>(static_cast<std::size_t>(n), -1), greedy.count(), {}};
    // Clique vertices are pairwise adjacent; pinning them to distinct colors
    // prunes symmetric branches.
    for (int i = 0; i < omega; ++i) s.assign[static_cast<std::size_t>(i)] = i;
    s.run(static_cast<std::size_t>(omega), omega);
    Coloring out;
    if (s.best_assign.empty()) {
        out = greedy;
    } else {
        out.classes.assign(static_cast<std::size_t>(s.best), VertexSet{});
        for (std::size_t i = 0; i < order.size(); ++i)
            out.classes[static_cast<std::size_t>(s.best_assign[i])].add(order[i]);
    }
    if (!out.proper_cover(g)) throw InternalError("oracle coloring is improper");
    return {out.count(), out};
}

namespace {

void mwc_expand(const Graph& g, const std::vector<int>& w, VertexSet r, long long wr, VertexSet p,
                long long& best, VertexSet& best_set) {
    long long bound = wr;
    for (int v : p) bound += w[static_cast<std::size_t>(v)];
    if (bound <= best) return;
    while (!p.empty()) {
        int v = p.first();
        p.remove(v);
        long long wv = wr + w[static_cast<std::size_t>(v)];
        VertexSet rv = r | VertexSet::single(v);
        if (wv > best) {
            best = wv;
            best_set = rv;
        }
        mwc_expand(g, w, rv, wv, p & g.neighbors(v), best, best_set);
        long long rest = wr;
        for (int u : p) rest += w[static_cast<std::size_t>(u)];
        if (rest <= best) return;
    }
}

}  // namespace

std::pair<long long, VertexSet> max_weight_clique(const Graph& g, const std::vector<int>& w) {
    if (static_cast<int>(w.size()) != g.vertex_count())
        throw InputError("max_weight_clique: weight vector size mismatch");
    for (int x : w)
        if (x < 0) throw InputError("max_weight_clique: negative weight");
    long long best = 0;
    VertexSet best_set;
    mwc_expand(g, w, VertexSet{}, 0, g.vertices(), best, best_set);
    return {best, best_set};
}

// ---- weakly chordal branch -------------------------------------------------

std::optional<std::pair<int, int>> find_even_pair(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (g.adjacent(a, b)) continue;
            bool all_even = true;
            for (const auto& path : chordless_paths(g, a, b, n)) {
                if ((path.size() - 1) % 2 != 0) {
                    all_even = false;
                    break;
                }
            }
            if (all_even) return std::make_pair(a, b);
        }
    return std::nullopt;
}

namespace {

Coloring color_wc_rec(const Graph& g) {
    const int n = g.vertex_count();
    if (is_clique(g, g.vertices())) {
        Coloring out;
        for (int v = 0; v < n; ++v) out.classes.push_back(VertexSet::single(v));
        return out;
    }
    auto pair = find_even_pair(g);
    if (!pair)
        throw InternalError("weakly chordal non-clique graph without an even pair");
    auto [a, b] = *pair;
    // Contract b into a.
    std::vector<int> to_old;
    Graph contracted(n - 1);
    std::vector<int> map(static_cast<std::size_t>(n), -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == b) continue;
        map[static_cast<std::size_t>(v)] = next++;
        to_old.push_back(v);
    }
    map[static_cast<std::size_t>(b)] = map[static_cast<std::size_t>(a)];
    for (auto [u, v] : g.edges()) {
        int mu = map[static_cast<std::size_t>(u)], mv = map[static_cast<std::size_t>(v)];
        if (mu != mv && !contracted.adjacent(mu, mv)) contracted.add_edge(mu, mv);
    }
    Coloring sub = color_wc_rec(contracted);
    Coloring out;
    out.classes.assign(sub.classes.size(), VertexSet{});
    for (int v = 0; v < n; ++v)
        out.classes[static_cast<std::size_t>(sub.color_of(map[static_cast<std::size_t>(v)]))].add(v);
    return out;
}

}  // namespace

Coloring color_weakly_chordal(const Graph& g) {
    if (g.vertex_count() == 0) return Coloring{};
    Coloring out = color_wc_rec(g);
    if (!out.proper_cover(g)) throw InternalError("weakly chordal coloring is improper");
    return out;
}

// ---- chain coloring --------------------------------------------------------

Coloring chain_color(const Graph& g, const Orientation& o) {
    if (!o.covers(g) || !verify_transitive(g, o).ok || !verify_acyclic(g, o).ok)
        throw InputError("chain_color requires a total transitive acyclic orientation");
    const int n = g.vertex_count();
    std::vector<int> height(static_cast<std::size_t>(n), -1);
    // Longest directed path ending at v, via memoized DFS over predecessors.
    std::vector<VertexSet> preds(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u)
        for (int v : o.successors(u)) preds[static_cast<std::size_t>(v)].add(u);
    auto compute = [&](auto&& self, int v) -> int {
        int& h = height[static_cast<std::size_t>(v)];
        if (h >= 0) return h;
        int best = 0;
        for (int u : preds[static_cast<std::size_t>(v)]) best = std::max(best, self(self, u) + 1);
        return h = best;
    };
    Coloring out;
    for (int v = 0; v < n; ++v) {
        int h = compute(compute, v);
        while (out.count() <= h) out.classes.push_back(VertexSet{});
        out.classes[static_cast<std::size_t>(h)].add(v);
    }
    if (!out.proper_cover(g)) throw InternalError("chain coloring is improper");
    return out;
}

// ---- driver ----------------------------------------------------------------

namespace {

Orientation lift_orientation(const Orientation& sub, const std::vector<int>& to_parent, int n) {
    Orientation out(n);
    for (auto [u, v] : sub.arcs())
        out.set(to_parent[static_cast<std::size_t>(u)], to_parent[static_cast<std::size_t>(v)],
                sub.provenance(u, v));
    return out;
}

Orientation orient_rec(const Graph& g, TraceNode* trace) {
    ClassCheck cc = check_class(g, true);
    if (!cc.in_class_b())
        throw StructureError("orientation requires a class-B member: " + cc.first_violation());
    if (auto sens = find_sensitive_vertex(g)) {
        if (trace) {
            trace->branch = TraceNode::Branch::SensitivePeel;
            trace->detail = "x=" + std::to_string(sens->x);
            trace->children.emplace_back();
        }
        SensitiveContext ctx = build_sensitive_context(g, sens->x, sens->u);
        std::vector<int> to_parent;
        Graph peeled = remove_vertex(g, sens->x, &to_parent);
        Orientation base =
            orient_rec(peeled, trace ? &trace->children.back() : nullptr);
        Orientation lifted = lift_orientation(base, to_parent, g.vertex_count());
        return extend_orientation_sensitive(g, ctx, lifted);
    }
    BoxPartition bp = build_box_partition(g);
    if (trace) {
        trace->branch = TraceNode::Branch::BoxOrientation;
        trace->detail = std::to_string(bp.boxes.size()) + " boxes over " +
                        std::to_string(bp.levels.size()) + " levels";
    }
    Orientation o = orient_by_rules(g, bp);
    return make_acyclic_transitive(g, o);
}

}  // namespace

Orientation orient_class_graph(const Graph& g, TraceNode* trace) {
    return orient_rec(g, trace);
}

namespace {

Coloring drive(const Graph& g, TraceNode& trace) {
    const int n = g.vertex_count();
    if (n == 0) {
        trace.branch = TraceNode::Branch::BaseCase;
        trace.detail = "empty";
        return Coloring{};
    }
    if (is_clique(g, g.vertices())) {
        trace.branch = TraceNode::Branch::BaseCase;
        trace.detail = "clique of size " + std::to_string(n);
        Coloring out;
        for (int v = 0; v < n; ++v) out.classes.push_back(VertexSet::single(v));
        return out;
    }

    auto homos = maximal_homogeneous_sets(g);
    if (!homos.empty()) {
        const VertexSet h = homos.front();
        trace.branch = TraceNode::Branch::Homogeneous;
        if (is_clique(g, h)) {
            // Clique substitution would be the identity; the members are true
            // twins, so peel all but one and give each its own fresh color.
            trace.detail = "twin clique " + format_vertices(h);
            int keep = h.first();
            VertexSet removed = h;
            removed.remove(keep);
            InducedSubgraph sub = induced_subgraph(g, g.vertices() - removed);
            trace.children.emplace_back();
            Coloring inner = drive(sub.graph, trace.children.back());
            Coloring out;
            out.classes.assign(inner.classes.size(), VertexSet{});
            for (std::size_t i = 0; i < sub.to_parent.size(); ++i)
                out.classes[static_cast<std::size_t>(inner.color_of(static_cast<int>(i)))].add(
                    sub.to_parent[i]);
            for (int v : removed) out.classes.push_back(VertexSet::single(v));
            if (!out.proper_cover(g)) throw InternalError("twin peel produced improper coloring");
            return out;
        }
        InducedSubgraph hs = induced_subgraph(g, h);
        trace.children.emplace_back();
        Coloring inner = drive(hs.graph, trace.children.back());
        int k = inner.count();
        trace.detail = "H=" + format_vertices(h) + " needs " + std::to_string(k) + " colors";
        Substitution sub = substitute_clique(g, h, k);
        trace.children.emplace_back();
        Coloring outer = drive(sub.graph, trace.children.back());
        return merge_colorings(g, outer, inner, sub, hs);
    }

    if (is_weakly_chordal(g).weakly_chordal) {
        trace.branch = TraceNode::Branch::WeaklyChordal;
        return color_weakly_chordal(g);
    }

    Orientation o = orient_class_graph(g, &trace);
    return chain_color(g, o);
}

}  // namespace

std::pair<Coloring, TraceNode> color_driver(const Graph& g) {
    ClassCheck cc = check_class(g, false);
    if (!cc.in_base_class())
        throw StructureError("class refusal: " + cc.first_violation());
    TraceNode trace{TraceNode::Branch::BaseCase, "", {}};
    Coloring out = drive(g, trace);
    if (!out.proper_cover(g)) throw InternalError("driver produced an improper coloring");
    return {out, trace};
}

// ---- weighted coloring -----------------------------------------------------

namespace {

struct Blowup {
    Graph graph;
    std::vector<int> origin;  // copy -> original vertex
};

Blowup build_blowup(const Graph& g, const std::vector<int>& w, int cap) {
    long long total = std::accumulate(w.begin(), w.end(), 0LL);
    if (total > cap)
        throw InputError("weight replication needs " + std::to_string(total) +
                         " vertices, beyond the cap of " + std::to_string(cap));
    if (total > kMaxVertices)
        throw InputError("weight replication exceeds the compiled vertex capacity");
    Blowup out;
    out.graph = Graph(static_cast<int>(total));
    std::vector<std::vector<int>> copies(static_cast<std::size_t>(g.vertex_count()));
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        for (int i = 0; i < w[static_cast<std::size_t>(v)]; ++i) {
            copies[static_cast<std::size_t>(v)].push_back(next);
            out.origin.push_back(v);
            ++next;
        }
    for (int v = 0; v < g.vertex_count(); ++v) {
        const auto& cv = copies[static_cast<std::size_t>(v)];
        for (std::size_t i = 0; i < cv.size(); ++i)
            for (std::size_t j = i + 1; j < cv.size(); ++j) out.graph.add_edge(cv[i], cv[j]);
        for (int u : g.neighbors(v)) {
            if (u >= v) continue;
            for (int cu : copies[static_cast<std::size_t>(u)])
                for (int cw : cv) out.graph.add_edge(cu, cw);
        }
    }
    return out;
}

// True-twin copies inherit the base arcs; copies of one vertex form a chain.
Orientation lift_to_blowup(const Orientation& o, const Blowup& b) {
    Orientation out(b.graph.vertex_count());
    for (int cu = 0; cu < b.graph.vertex_count(); ++cu)
        for (int cv = 0; cv < b.graph.vertex_count(); ++cv) {
            if (cu == cv || !b.graph.adjacent(cu, cv)) continue;
            int u = b.origin[static_cast<std::size_t>(cu)], v = b.origin[static_cast<std::size_t>(cv)];
            bool forward = (u == v) ? cu < cv : o.has(u, v);
            if (forward && !out.has(cu, cv)) out.set(cu, cv, Rule::Forcing);
        }
    return out;
}

WeightedColoring regroup(const Coloring& c, const Blowup& b) {
    std::map<VertexSet, long long> merged;
    for (const auto& cls : c.classes) {
        VertexSet proj;
        for (int copy : cls) proj.add(b.origin[static_cast<std::size_t>(copy)]);
        if (!proj.empty()) merged[proj] += 1;
    }
    WeightedColoring out;
    for (const auto& [set, weight] : merged) {
        out.classes.push_back(set);
        out.weights.push_back(weight);
    }
    return out;
}

WeightedColoring weighted_rec(const Graph& g, const std::vector<int>& w, int cap);

WeightedColoring weighted_homogeneous(const Graph& g, const std::vector<int>& w,
                                      const VertexSet& h, int cap) {
    if (is_clique(g, h)) {
        // True twins: merge into one vertex carrying the summed weight, then
        // split its coverage back across the twins.
        Substitution sub = substitute_clique(g, h, 1);
        std::vector<int> w2(static_cast<std::size_t>(sub.graph.vertex_count()), 0);
        int q = sub.clique[0];
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (h.contains(v)) w2[static_cast<std::size_t>(q)] += w[static_cast<std::size_t>(v)];
            else w2[static_cast<std::size_t>(sub.kept_to_new[static_cast<std::size_t>(v)])] =
                     w[static_cast<std::size_t>(v)];
        }
        WeightedColoring inner = weighted_rec(sub.graph, w2, cap);
        std::vector<int> new_to_old(static_cast<std::size_t>(sub.graph.vertex_count()), -1);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!h.contains(v)) new_to_old[static_cast<std::size_t>(sub.kept_to_new[static_cast<std::size_t>(v)])] = v;
        WeightedColoring out;
        std::vector<int> twins = h.to_vector();
        std::size_t ti = 0;
        long long need = twins.empty() ? 0 : w[static_cast<std::size_t>(twins[0])];
        for (std::size_t i = 0; i < inner.classes.size(); ++i) {
            VertexSet base;
            for (int nv : inner.classes[i])
                if (nv != q) base.add(new_to_old[static_cast<std::size_t>(nv)]);
            if (!inner.classes[i].contains(q)) {
                out.classes.push_back(base);
                out.weights.push_back(inner.weights[i]);
                continue;
            }
            long long avail = inner.weights[i];
            while (avail > 0 && ti < twins.size()) {
                while (ti < twins.size() && need == 0) {
                    ++ti;
                    if (ti < twins.size()) need = w[static_cast<std::size_t>(twins[ti])];
                }
                if (ti >= twins.size()) break;
                long long use = std::min(avail, need);
                VertexSet cls = base;
                cls.add(twins[ti]);
                out.classes.push_back(cls);
                out.weights.push_back(use);
                avail -= use;
                need -= use;
            }
            if (avail > 0) {
                // Excess coverage; keep it on the last twin.
                VertexSet cls = base;
                cls.add(twins.back());
                out.classes.push_back(cls);
                out.weights.push_back(avail);
            }
        }
        return out;
    }

    InducedSubgraph hs = induced_subgraph(g, h);
    std::vector<int> wh;
    for (int v : hs.to_parent) wh.push_back(w[static_cast<std::size_t>(v)]);
    WeightedColoring inner = weighted_rec(hs.graph, wh, cap);
    int p = static_cast<int>(inner.classes.size());
    if (p >= h.size())
        throw StructureError("weighted substitution made no progress on H=" + format_vertices(h));
    Substitution sub = substitute_clique(g, h, p);
    std::vector<int> w2(static_cast<std::size_t>(sub.graph.vertex_count()), 0);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!h.contains(v))
            w2[static_cast<std::size_t>(sub.kept_to_new[static_cast<std::size_t>(v)])] = w[static_cast<std::size_t>(v)];
    for (int i = 0; i < p; ++i)
        w2[static_cast<std::size_t>(sub.clique[static_cast<std::size_t>(i)])] =
            static_cast<int>(inner.weights[static_cast<std::size_t>(i)]);
    WeightedColoring outer = weighted_rec(sub.graph, w2, cap);

    std::vector<int> new_to_old(static_cast<std::size_t>(sub.graph.vertex_count()), -1);
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!h.contains(v)) new_to_old[static_cast<std::size_t>(sub.kept_to_new[static_cast<std::size_t>(v)])] = v;
    WeightedColoring out;
    for (std::size_t j = 0; j < outer.classes.size(); ++j) {
        VertexSet cls;
        for (int nv : outer.classes[j]) {
            bool is_q = false;
            for (int i = 0; i < p; ++i)
                if (sub.clique[static_cast<std::size_t>(i)] == nv) {
                    // Splice in the matching inner class, lifted to g's ids.
                    for (int iv : inner.classes[static_cast<std::size_t>(i)])
                        cls.add(hs.to_parent[static_cast<std::size_t>(iv)]);
                    is_q = true;
                    break;
                }
            if (!is_q) cls.add(new_to_old[static_cast<std::size_t>(nv)]);
        }
        if (!cls.empty()) {
            out.classes.push_back(cls);
            out.weights.push_back(outer.weights[j]);
        }
    }
    return out;
}

WeightedColoring weighted_rec(const Graph& g, const std::vector<int>& w, int cap) {
    const int n = g.vertex_count();
    if (n == 0) return WeightedColoring{};
    if (is_clique(g, g.vertices())) {
        WeightedColoring out;
        for (int v = 0; v < n; ++v) {
            out.classes.push_back(VertexSet::single(v));
            out.weights.push_back(w[static_cast<std::size_t>(v)]);
        }
        return out;
    }
    auto homos = maximal_homogeneous_sets(g);
    if (!homos.empty()) return weighted_homogeneous(g, w, homos.front(), cap);
    if (is_weakly_chordal(g).weakly_chordal) {
        Blowup b = build_blowup(g, w, cap);
        return regroup(color_weakly_chordal(b.graph), b);
    }
    Orientation o = orient_class_graph(g);
    Blowup b = build_blowup(g, w, cap);
    Orientation lifted = lift_to_blowup(o, b);
    return regroup(chain_color(b.graph, lifted), b);
}

}  // namespace

WeightedColoring weighted_color(const Graph& g, const std::vector<int>& w, int replication_cap) {
    if (static_cast<int>(w.size()) != g.vertex_count())
        throw InputError("weighted_color: weight vector size mismatch");
    for (int x : w)
        if (x < 0) throw InputError("weighted_color: weights must be nonnegative");
    ClassCheck cc = check_class(g, false);
    if (!cc.in_base_class())
        throw StructureError("class refusal: " + cc.first_violation());

    // Zero-weight vertices need no coverage and never help a stable set.
    VertexSet keep;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (w[static_cast<std::size_t>(v)] > 0) keep.add(v);
    InducedSubgraph sub = induced_subgraph(g, keep);
    std::vector<int> wk;
    for (int v : sub.to_parent) wk.push_back(w[static_cast<std::size_t>(v)]);
    WeightedColoring inner = weighted_rec(sub.graph, wk, replication_cap);
    WeightedColoring out;
    for (std::size_t i = 0; i < inner.classes.size(); ++i) {
        if (inner.weights[i] == 0) continue;
        VertexSet cls;
        for (int v : inner.classes[i]) cls.add(sub.to_parent[static_cast<std::size_t>(v)]);
        out.classes.push_back(cls);
        out.weights.push_back(inner.weights[i]);
    }
    if (!out.feasible(g, w)) throw InternalError("weighted coloring violates the covering bound");
    return out;
}

// ---- serialization ---------------------------------------------------------

std::string serialize_coloring(const Coloring& c, int n) {
    std::ostringstream os;
    for (int v = 0; v < n; ++v) os << v << ' ' << c.color_of(v) << "\n";
    return os.str();
}

Coloring parse_coloring(const Graph& g, const std::string& text) {
    std::istringstream is(text);
    std::string line;
    Coloring out;
    int lineno = 0;
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int v, color;
        if (!(ls >> v >> color) || color < 0)
            throw InputError("coloring line " + std::to_string(lineno) + " malformed: " + line);
        g.check_vertex(v);
        if (seen[static_cast<std::size_t>(v)])
            throw InputError("coloring line " + std::to_string(lineno) + ": duplicate vertex");
        seen[static_cast<std::size_t>(v)] = true;
        while (out.count() <= color) out.classes.push_back(VertexSet{});
        out.classes[static_cast<std::size_t>(color)].add(v);
    }
    return out;
}

std::string serialize_weighted_coloring(const WeightedColoring& c) {
    std::ostringstream os;
    for (std::size_t i = 0; i < c.classes.size(); ++i) {
        os << i << ' ' << c.weights[i] << ':';
        for (int v : c.classes[i]) os << ' ' << v;
        os << "\n";
    }
    return os.str();
}

WeightedColoring parse_weighted_coloring(const std::string& text) {
    WeightedColoring out;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw InputError("weighted coloring line " + std::to_string(lineno) + " malformed");
        std::istringstream head(line.substr(0, colon));
        std::size_t idx;
        long long weight;
        if (!(head >> idx >> weight) || weight < 0)
            throw InputError("weighted coloring line " + std::to_string(lineno) + " malformed");
        std::istringstream tail(line.substr(colon + 1));
        VertexSet cls;
        int v;
        while (tail >> v) cls.add(v);
        out.classes.push_back(cls);
        out.weights.push_back(weight);
    }
    return out;
}

}  // namespace bullberge
