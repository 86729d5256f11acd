#include "bullberge/recognition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace bullberge {

void Hole::canonicalize() {
    if (cycle.empty()) return;
    const int n = static_cast<int>(cycle.size());
    int mi = 0;
    for (int i = 1; i < n; ++i)
        if (cycle[i] < cycle[mi]) mi = i;
    std::vector<int> rot(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) rot[static_cast<std::size_t>(i)] = cycle[static_cast<std::size_t>((mi + i) % n)];
    if (rot[static_cast<std::size_t>(n - 1)] < rot[1])
        std::reverse(rot.begin() + 1, rot.end());
    cycle = std::move(rot);
}

bool is_valid_hole(const Graph& g, const Hole& h) {
    const int n = h.length();
    if (n < 5) return false;
    if (h.members().size() != n) return false;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == n - 1);
            if (g.adjacent(h.cycle[static_cast<std::size_t>(i)], h.cycle[static_cast<std::size_t>(j)]) != consecutive)
                return false;
        }
    return true;
}

std::vector<Bull> enumerate_bulls(const Graph& g) {
    std::vector<Bull> out;
    const int n = g.vertex_count();
    for (int t1 = 0; t1 < n; ++t1)
        for (int t2 : g.neighbors(t1)) {
            if (t2 <= t1) continue;
            for (int t3 : g.neighbors(t1) & g.neighbors(t2)) {
                if (t3 <= t2) continue;
                // Triangle {t1,t2,t3}; each member may play the center x.
                const int tri[3] = {t1, t2, t3};
                for (int xi = 0; xi < 3; ++xi) {
                    int x = tri[xi];
                    int y = tri[(xi + 1) % 3], z = tri[(xi + 2) % 3];
                    if (y > z) std::swap(y, z);
                    VertexSet rs = g.neighbors(y) - g.neighbors(x) - g.neighbors(z);
                    rs.remove(x);
                    rs.remove(z);
                    VertexSet ss = g.neighbors(z) - g.neighbors(x) - g.neighbors(y);
                    ss.remove(x);
                    ss.remove(y);
                    for (int r : rs)
                        for (int s : ss) {
                            if (r == s || g.adjacent(r, s)) continue;
                            out.push_back(Bull{r, y, x, z, s});
                        }
                }
            }
        }
    (void)all;
    std::sort(out.begin(), out.end(), [](const Bull& a, const Bull& b) { return a.tuple() < b.tuple(); });
    return out;
}

BullReducibility is_bull_reducible(const Graph& g) {
    BullReducibility res;
    std::vector<Bull> bulls = enumerate_bulls(g);
    std::vector<int> seen(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < bulls.size(); ++i) {
        for (int v : bulls[i].members()) {
            if (seen[static_cast<std::size_t>(v)] >= 0) {
                // Prefer the smallest witness vertex.
                if (res.reducible || v < res.witness) {
                    res.reducible = false;
                    res.witness = v;
                    res.first = bulls[static_cast<std::size_t>(seen[static_cast<std::size_t>(v)])];
                    res.second = bulls[i];
                }
            } else {
                seen[static_cast<std::size_t>(v)] = static_cast<int>(i);
            }
        }
    }
    return res;
}

std::optional<Hole> hole_through_p3(const Graph& g, int a, int b, int c) {
    g.check_vertex(a);
    g.check_vertex(b);
    g.check_vertex(c);
    if (!(g.adjacent(a, b) && g.adjacent(b, c) && !g.adjacent(a, c)) || a == c)
        throw InputError("hole_through_p3: vertices do not induce a P3");
    VertexSet removed = (g.neighbors(a) & g.neighbors(c)) | (g.neighbors(b) - VertexSet::of({a, c}));
    removed.remove(a);
    removed.remove(c);
    // BFS for a shortest a-c path avoiding the removed vertices.
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()), -2);
    std::deque<int> queue{a};
    parent[static_cast<std::size_t>(a)] = -1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        if (v == c) break;
        for (int w : g.neighbors(v)) {
            if (removed.contains(w) || parent[static_cast<std::size_t>(w)] != -2) continue;
            parent[static_cast<std::size_t>(w)] = v;
            queue.push_back(w);
        }
    }
    if (parent[static_cast<std::size_t>(c)] == -2) return std::nullopt;
    Hole h;
    for (int v = c; v != -1; v = parent[static_cast<std::size_t>(v)]) h.cycle.push_back(v);
    std::reverse(h.cycle.begin(), h.cycle.end());  // a ... c
    h.cycle.push_back(b);
    h.canonicalize();
    return h;
}

namespace {

template <typename Keep>
std::optional<Hole> p3_scan(const Graph& g, Keep keep) {
    std::optional<Hole> best;
    const int n = g.vertex_count();
    for (int b = 0; b < n; ++b)
        for (int a : g.neighbors(b))
            for (int c : g.neighbors(b)) {
                if (a >= c || g.adjacent(a, c)) continue;
                auto h = hole_through_p3(g, a, b, c);
                if (!h || !keep(*h)) continue;
                if (!best || h->length() < best->length()) best = h;
            }
    return best;
}

}  // namespace

std::optional<Hole> find_hole(const Graph& g) {
    return p3_scan(g, [](const Hole&) { return true; });
}

std::optional<Hole> find_shortest_even_hole(const Graph& g) {
    return p3_scan(g, [](const Hole& h) { return h.even() && h.length() >= 6; });
}

namespace {

// DFS over chordless paths starting at the cycle's minimum vertex v0; a
// candidate adjacent to v0 closes a cycle and cannot be extended past.
bool parity_dfs(const Graph& g, int v0, std::vector<int>& path, VertexSet on_path, VertexSet banned,
                int parity, int min_len, int max_len, Hole& out) {
    int tail = path.back();
    VertexSet cand = g.neighbors(tail) - on_path - banned;
    for (int w : cand) {
        if (w <= v0) continue;
        if (g.adjacent(w, v0)) {
            int len = static_cast<int>(path.size()) + 1;
            if (len >= 5 && len >= min_len && len <= max_len && len % 2 == parity && path[1] < w) {
                out.cycle = path;
                out.cycle.push_back(w);
                out.canonicalize();
                return true;
            }
            continue;
        }
        if (static_cast<int>(path.size()) + 2 > max_len) continue;
        path.push_back(w);
        VertexSet nb = banned | (g.neighbors(tail) - VertexSet::single(w));
        if (parity_dfs(g, v0, path, on_path | VertexSet::single(w), nb, parity, min_len, max_len, out))
            return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<Hole> find_hole_with_parity(const Graph& g, int parity, int min_len, int max_len) {
    const int n = g.vertex_count();
    for (int v0 = 0; v0 < n; ++v0)
        for (int v1 : g.neighbors(v0)) {
            if (v1 <= v0) continue;
            std::vector<int> path{v0, v1};
            Hole h;
            // Vertices adjacent to v0 may only appear as the closing vertex;
            // parity_dfs never extends past them.
            if (parity_dfs(g, v0, path, VertexSet::of({v0, v1}), VertexSet{}, parity, min_len,
                           max_len, h))
                return h;
        }
    return std::nullopt;
}

std::optional<Hole> find_antihole(const Graph& g) {
    auto h = find_hole(complement(g));
    return h;
}

WeaklyChordalCheck is_weakly_chordal(const Graph& g) {
    WeaklyChordalCheck out;
    if (auto h = find_hole(g)) {
        out.weakly_chordal = false;
        out.witness = h;
        return out;
    }
    if (auto ah = find_antihole(g)) {
        out.weakly_chordal = false;
        out.witness = ah;
        out.witness_in_complement = true;
    }
    return out;
}

std::string to_string(StructureKind k) {
    switch (k) {
        case StructureKind::Wheel: return "wheel";
        case StructureKind::DoubleBroom: return "double broom";
        case StructureKind::Lock: return "lock";
        case StructureKind::SpikedF1: return "spiked F1";
        case StructureKind::SpikedF2: return "spiked F2";
    }
    return "?";
}

namespace {

std::optional<StructureWitness> detect_wheel(const Graph& g) {
    for (int hub = 0; hub < g.vertex_count(); ++hub) {
        InducedSubgraph sub = induced_subgraph(g, g.neighbors(hub));
        auto h = find_hole_with_parity(sub.graph, 0, 6);
        if (!h) continue;
        StructureWitness w{StructureKind::Wheel, {}};
        for (int v : h->cycle) w.vertices.push_back(sub.to_parent[static_cast<std::size_t>(v)]);
        w.vertices.push_back(hub);
        return w;
    }
    return std::nullopt;
}

std::optional<StructureWitness> detect_double_broom(const Graph& g) {
    const int n = g.vertex_count();
    for (int p2 = 0; p2 < n; ++p2)
        for (int p3 : g.neighbors(p2)) {
            if (p3 <= p2) continue;
            for (int p1 : g.neighbors(p2) - g.neighbors(p3)) {
                if (p1 == p3) continue;
                for (int p4 : g.neighbors(p3) - g.neighbors(p2) - g.neighbors(p1)) {
                    if (p4 == p2 || p4 == p1) continue;
                    VertexSet p4set = VertexSet::of({p1, p2, p3, p4});
                    std::vector<int> full;
                    for (int v = 0; v < n; ++v)
                        if (!p4set.contains(v) && g.sees_all(v, p4set)) full.push_back(v);
                    for (std::size_t i = 0; i < full.size(); ++i)
                        for (std::size_t j = i + 1; j < full.size(); ++j) {
                            int a = full[i], a2 = full[j];
                            if (g.adjacent(a, a2)) continue;
                            for (int b : g.neighbors(a)) {
                                if (b == a2 || p4set.contains(b)) continue;
                                if (g.adjacent(b, a2) || !g.misses_all(b, p4set)) continue;
                                for (int b2 : g.neighbors(a2)) {
                                    if (b2 == a || b2 == b || p4set.contains(b2)) continue;
                                    if (g.adjacent(b2, a) || g.adjacent(b2, b) || !g.misses_all(b2, p4set))
                                        continue;
                                    return StructureWitness{StructureKind::DoubleBroom,
                                                            {p1, p2, p3, p4, a, a2, b, b2}};
                                }
                            }
                        }
                }
            }
        }
    return std::nullopt;
}

}  // namespace

std::vector<StructureWitness> enumerate_locks(const Graph& g) {
    std::vector<StructureWitness> out;
    std::set<std::vector<int>> seen;
    const int n = g.vertex_count();
    // Induced C4 a-b-c-d with a minimal, b < d.
    for (int a = 0; a < n; ++a)
        for (int b : g.neighbors(a)) {
            if (b <= a) continue;
            for (int d : g.neighbors(a)) {
                if (d <= b || g.adjacent(b, d)) continue;
                for (int c : g.neighbors(b) & g.neighbors(d)) {
                    if (c <= a || c == b || c == d || g.adjacent(a, c)) continue;
                    const int cyc[4] = {a, b, c, d};
                    VertexSet cset = VertexSet::of({a, b, c, d});
                    for (int u5 = 0; u5 < n; ++u5) {
                        if (cset.contains(u5) || !g.sees_all(u5, cset)) continue;
                        // u6 sits on one adjacent pair of the C4 and nothing else.
                        for (int rot = 0; rot < 4; ++rot) {
                            int w1 = cyc[rot], w2 = cyc[(rot + 1) % 4];
                            int w3 = cyc[(rot + 2) % 4], w4 = cyc[(rot + 3) % 4];
                            for (int u6 : g.neighbors(w1) & g.neighbors(w2)) {
                                if (u6 == u5 || cset.contains(u6)) continue;
                                if (g.adjacent(u6, w3) || g.adjacent(u6, w4) || g.adjacent(u6, u5)) continue;
                                std::vector<int> key{w1, w2, w3, w4, u5, u6};
                                std::vector<int> sorted = key;
                                std::sort(sorted.begin(), sorted.end());
                                if (!seen.insert(sorted).second) continue;
                                out.push_back(StructureWitness{StructureKind::Lock, key});
                            }
                        }
                    }
                }
            }
        }
    return out;
}

namespace {

std::optional<StructureWitness> detect_spiked(const Graph& g, StructureKind kind) {
    std::vector<std::vector<int>> cores;
    if (kind == StructureKind::SpikedF1) {
        for (const Bull& bl : enumerate_bulls(g))
            cores.push_back({bl.r, bl.y, bl.x, bl.z, bl.s});  // u1 u2 u5 u3 u4 reordered below
    } else {
        for (const StructureWitness& lk : enumerate_locks(g)) cores.push_back(lk.vertices);
    }
    for (auto& core : cores) {
        if (kind == StructureKind::SpikedF1) {
            // Bull r-yxz-s carries the F1 labels u1=r, u2=y, u5=x, u3=z, u4=s.
            core = {core[0], core[1], core[3], core[4], core[2]};  // u1 u2 u3 u4 u5
        }
        VertexSet w;
        for (int v : core) w.add(v);
        for (int a = 0; a < g.vertex_count(); ++a) {
            if (w.contains(a) || !g.sees_all(a, w)) continue;
            for (int b : g.neighbors(a)) {
                if (w.contains(b) || !g.misses_all(b, w)) continue;
                StructureWitness res{kind, core};
                res.vertices.push_back(a);
                res.vertices.push_back(b);
                return res;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<StructureWitness> detect_structure(const Graph& g, StructureKind kind) {
    switch (kind) {
        case StructureKind::Wheel: return detect_wheel(g);
        case StructureKind::DoubleBroom: return detect_double_broom(g);
        case StructureKind::Lock: {
            auto locks = enumerate_locks(g);
            if (locks.empty()) return std::nullopt;
            return locks.front();
        }
        case StructureKind::SpikedF1:
        case StructureKind::SpikedF2: return detect_spiked(g, kind);
    }
    return std::nullopt;
}

std::string ClassCheck::first_violation() const {
    if (!bulls.reducible)
        return "not bull-reducible: vertex " + std::to_string(bulls.witness) + " lies in two bulls";
    if (odd_hole) return "odd hole " + format_vertices(odd_hole->cycle);
    if (antihole) return "antihole " + format_vertices(antihole->cycle);
    if (wheel) return "wheel " + format_vertices(wheel->vertices);
    if (double_broom) return "double broom " + format_vertices(double_broom->vertices);
    if (spiked_f1) return "spiked F1 " + format_vertices(spiked_f1->vertices);
    if (spiked_f2) return "spiked F2 " + format_vertices(spiked_f2->vertices);
    return "";
}

ClassCheck check_class(const Graph& g, bool check_b_extras) {
    ClassCheck out;
    out.bulls = is_bull_reducible(g);
    out.odd_hole = find_hole_with_parity(g, 1, 5);
    out.antihole = find_antihole(g);
    if (check_b_extras && out.in_base_class()) {
        out.wheel = detect_structure(g, StructureKind::Wheel);
        out.double_broom = detect_structure(g, StructureKind::DoubleBroom);
        out.spiked_f1 = detect_structure(g, StructureKind::SpikedF1);
        out.spiked_f2 = detect_structure(g, StructureKind::SpikedF2);
    }
    return out;
}

std::optional<SensitiveWitness> find_sensitive_vertex(const Graph& g) {
    const int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        VertexSet rest = g.vertices();
        rest.remove(x);
        InducedSubgraph sub = induced_subgraph(g, rest);
        auto hole = find_hole(sub.graph);
        if (!hole) continue;
        const VertexSet nx = g.neighbors(x);
        for (int u2 : nx)
            for (int u3 : nx & g.neighbors(u2)) {
                if (u3 == u2) continue;
                for (int u1 : g.neighbors(u2) - nx - g.neighbors(u3)) {
                    if (u1 == u3 || u1 == x) continue;
                    for (int u4 : g.neighbors(u3) - nx - g.neighbors(u2) - g.neighbors(u1)) {
                        if (u4 == u1 || u4 == x) continue;
                        for (int u5 : g.neighbors(u4) - nx - g.neighbors(u1) - g.neighbors(u2) -
                                          g.neighbors(u3)) {
                            if (u5 == x) continue;
                            for (int u6 : g.neighbors(u5) - nx - g.neighbors(u2) - g.neighbors(u3) -
                                              g.neighbors(u4)) {
                                if (u6 == u1 || u6 == u2 || u6 == u3 || u6 == x) continue;
                                SensitiveWitness w;
                                w.x = x;
                                w.u = {u1, u2, u3, u4, u5, u6};
                                w.closes_c6 = g.adjacent(u1, u6);
                                for (int v : hole->cycle)
                                    w.hole_without_x.cycle.push_back(
                                        sub.to_parent[static_cast<std::size_t>(v)]);
                                return w;
                            }
                        }
                    }
                }
            }
    }
    return std::nullopt;
}

std::string to_string(HoleClassification::Variant v) {
    using V = HoleClassification::Variant;
    switch (v) {
        case V::FullWheel: return "full wheel";
        case V::AllOneParity: return "all of one parity";
        case V::ConsecutiveRun: return "consecutive run";
        case V::TwoAtDistance2: return "two at distance 2";
        case V::FourThreeConsecutive: return "four with three consecutive";
        case V::NoNeighbor: return "no neighbor (extension)";
    }
    return "?";
}

HoleClassification classify_vertex_vs_hole(const Graph& g, const Hole& c, int v) {
    const int ell = c.length();
    if (ell < 6 || !c.even() || !is_valid_hole(g, c))
        throw InputError("classify_vertex_vs_hole: not an even hole of length >= 6");
    if (c.members().contains(v)) throw InputError("classify_vertex_vs_hole: vertex lies on the hole");
    std::vector<int> marked;
    for (int i = 0; i < ell; ++i)
        if (g.adjacent(v, c.cycle[static_cast<std::size_t>(i)])) marked.push_back(i);
    const int cnt = static_cast<int>(marked.size());
    using V = HoleClassification::Variant;
    if (cnt == 0) return {V::NoNeighbor, 0};
    if (cnt == ell) return {V::FullWheel, 0};
    // Maximal cyclic runs of marked positions.
    std::vector<bool> mk(static_cast<std::size_t>(ell), false);
    for (int p : marked) mk[static_cast<std::size_t>(p)] = true;
    std::vector<int> runs;
    int start = 0;
    while (start < ell && mk[static_cast<std::size_t>(start)]) ++start;  // cnt < ell, exists
    for (int off = 0; off < ell;) {
        int i = (start + off) % ell;
        if (!mk[static_cast<std::size_t>(i)]) {
            ++off;
            continue;
        }
        int len = 0;
        while (len < ell && mk[static_cast<std::size_t>((start + off + len) % ell)]) ++len;
        runs.push_back(len);
        off += len;
    }
    bool same_parity = true;
    for (int p : marked) same_parity = same_parity && (p % 2 == marked[0] % 2);
    if (same_parity && cnt == ell / 2) return {V::AllOneParity, 0};
    if (cnt <= 3 && runs.size() == 1) return {V::ConsecutiveRun, cnt};
    if (cnt == 2) {
        int d = (marked[1] - marked[0] + ell) % ell;
        if (d == 2 || d == ell - 2) return {V::TwoAtDistance2, 0};
    }
    if (ell == 6 && cnt == 4 && runs.size() == 2 &&
        (std::max(runs[0], runs[1]) == 3))
        return {V::FourThreeConsecutive, 0};
    std::ostringstream os;
    os << "vertex " << v << " with hole neighborhood positions " << format_vertices(marked)
       << " matches no variant; hole " << format_vertices(c.cycle)
       << " is not a shortest even hole of a class member";
    throw StructureError(os.str());
}

}  // namespace bullberge
