#include "bullberge/orientation.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace bullberge {

std::string to_string(Rule r) {
    switch (r) {
        case Rule::None: return "-";
        case Rule::Rule0: return "0";
        case Rule::RuleS: return "S";
        case Rule::RuleP3: return "P3";
        case Rule::RuleP4: return "P4";
        case Rule::RuleQ3: return "Q3";
        case Rule::RuleQ4: return "Q4";
        case Rule::RuleD: return "D";
        case Rule::Lemma5: return "L5";
        case Rule::Forcing: return "TO";
    }
    return "?";
}

std::optional<Rule> rule_from_string(const std::string& s) {
    for (Rule r : {Rule::None, Rule::Rule0, Rule::RuleS, Rule::RuleP3, Rule::RuleP4, Rule::RuleQ3,
                   Rule::RuleQ4, Rule::RuleD, Rule::Lemma5, Rule::Forcing})
        if (to_string(r) == s) return r;
    return std::nullopt;
}

Orientation Orientation::reversed() const {
    Orientation out(n_);
    for (int u = 0; u < n_; ++u)
        for (int v : out_[static_cast<std::size_t>(u)]) out.set(v, u, provenance(u, v));
    return out;
}

bool Orientation::covers(const Graph& g) const {
    for (auto [u, v] : g.edges())
        if (!oriented(u, v)) return false;
    return true;
}

std::vector<std::array<int, 2>> Orientation::arcs() const {
    std::vector<std::array<int, 2>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : out_[static_cast<std::size_t>(u)]) out.push_back({u, v});
    return out;
}

TransitivityCheck verify_transitive(const Graph& g, const Orientation& o) {
    TransitivityCheck out;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : o.successors(u))
            for (int w : o.successors(v)) {
                if (w == u || g.adjacent(u, w)) continue;
                out.ok = false;
                out.triple = {u, v, w};
                return out;
            }
    return out;
}

AcyclicityCheck verify_acyclic(const Graph& g, const Orientation& o) {
    (void)g;
    AcyclicityCheck out;
    const int n = o.vertex_count();
    std::vector<int> state(static_cast<std::size_t>(n), 0);  // 0 white, 1 on stack, 2 done
    std::vector<int> stack;
    // Iterative DFS keeping the gray path for cycle extraction.
    for (int root = 0; root < n; ++root) {
        if (state[static_cast<std::size_t>(root)] != 0) continue;
        std::vector<std::pair<int, VertexSet::iterator>> frames;
        state[static_cast<std::size_t>(root)] = 1;
        stack.push_back(root);
        frames.emplace_back(root, o.successors(root).begin());
        while (!frames.empty()) {
            auto& [v, it] = frames.back();
            if (it != o.successors(v).end()) {
                int w = *it;
                ++it;
                if (state[static_cast<std::size_t>(w)] == 1) {
                    auto pos = std::find(stack.begin(), stack.end(), w);
                    out.cycle.assign(pos, stack.end());
                    out.ok = false;
                    return out;
                }
                if (state[static_cast<std::size_t>(w)] == 0) {
                    state[static_cast<std::size_t>(w)] = 1;
                    stack.push_back(w);
                    frames.emplace_back(w, o.successors(w).begin());
                }
            } else {
                state[static_cast<std::size_t>(v)] = 2;
                stack.pop_back();
                frames.pop_back();
            }
        }
    }
    return out;
}

std::optional<Orientation> comparability_orientation(const Graph& g) {
    const int n = g.vertex_count();
    Orientation o(n);
    // Remaining undecided edges; both the adjacency and the non-adjacency of
    // the forcing relation are taken in this shrinking graph.
    std::vector<VertexSet> rem(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rem[static_cast<std::size_t>(v)] = g.neighbors(v);
    auto rem_adjacent = [&](int a, int b) { return rem[static_cast<std::size_t>(a)].contains(b); };

    while (true) {
        int su = -1, sv = -1;
        for (int u = 0; u < n && su < 0; ++u) {
            int v = rem[static_cast<std::size_t>(u)].first();
            if (v >= 0) su = u, sv = std::max(v, -1);
        }
        if (su < 0) break;
        // Orient the implication class seeded by su->sv.
        std::vector<std::array<int, 2>> cls;
        std::deque<std::array<int, 2>> queue;
        std::vector<VertexSet> fwd(static_cast<std::size_t>(n));  // arcs chosen in this class
        auto push_arc = [&](int a, int b) -> bool {
            if (fwd[static_cast<std::size_t>(a)].contains(b)) return true;
            if (fwd[static_cast<std::size_t>(b)].contains(a)) return false;  // conflict
            fwd[static_cast<std::size_t>(a)].add(b);
            cls.push_back({a, b});
            queue.push_back({a, b});
            return true;
        };
        push_arc(su, sv);
        while (!queue.empty()) {
            auto [a, b] = queue.front();
            queue.pop_front();
            for (int c : rem[static_cast<std::size_t>(a)]) {
                if (c != b && !rem_adjacent(b, c) && !push_arc(a, c)) return std::nullopt;
            }
            for (int c : rem[static_cast<std::size_t>(b)]) {
                if (c != a && !rem_adjacent(a, c) && !push_arc(c, b)) return std::nullopt;
            }
        }
        for (auto [a, b] : cls) {
            o.set(a, b, Rule::Forcing);
            rem[static_cast<std::size_t>(a)].remove(b);
            rem[static_cast<std::size_t>(b)].remove(a);
        }
    }
    if (!verify_transitive(g, o).ok) return std::nullopt;
    if (!verify_acyclic(g, o).ok) return std::nullopt;
    return o;
}

EdgeClass classify_edge(const Graph& g, const BoxPartition& bp, int box, int u, int v) {
    if (box < 0 || box >= static_cast<int>(bp.boxes.size()))
        throw InputError("classify_edge: bad box index");
    const Box& b = bp.boxes[static_cast<std::size_t>(box)];
    if (!b.members.contains(u) || !b.members.contains(v) || !g.adjacent(u, v))
        throw InputError("classify_edge: uv is not an edge inside the box");
    EdgeClass out;
    for (int p : partial_vertices(g, b.members))
        if (g.adjacent(p, u) != g.adjacent(p, v)) out.witnesses.push_back(p);
    out.sharp = !out.witnesses.empty();
    return out;
}

namespace {

struct Firing {
    bool u_to_v;  // direction relative to the canonical (u < v) edge
    Rule rule;
    std::string detail;
};

std::string arc_str(int a, int b) { return std::to_string(a) + "->" + std::to_string(b); }

// Pattern scans for one ordered pair (a,b) of a dull in-box edge. Directions
// follow the odd-box statements; even boxes flip them.
void scan_patterns(const Graph& g, const Box& box, const VertexSet& pb,
                   const std::vector<std::vector<char>>& dull, int a, int b, int u, int v,
                   std::vector<Firing>& firings) {
    auto fire = [&](bool a_to_b, Rule rule, std::string detail) {
        bool dir = box.odd_label ? a_to_b : !a_to_b;
        bool canonical = (a == u) ? dir : !dir;  // express as u->v or v->u
        firings.push_back(Firing{canonical, rule, std::move(detail)});
    };
    const VertexSet& bm = box.members;
    for (int w : g.neighbors(b) & bm) {
        if (w == a || g.adjacent(w, a)) continue;
        // chordless a-b-w
        for (int p : pb) {
            if (g.adjacent(p, w) && !g.adjacent(p, a) && !g.adjacent(p, b))
                fire(true, Rule::RuleP3, "P3 path " + std::to_string(a) + "-" + std::to_string(b) +
                                             "-" + std::to_string(w) + " witness " + std::to_string(p));
            if (g.adjacent(p, a) && g.adjacent(p, b) && !g.adjacent(p, w))
                fire(false, Rule::RuleQ3, "Q3 path " + std::to_string(a) + "-" + std::to_string(b) +
                                              "-" + std::to_string(w) + " witness " + std::to_string(p));
        }
        for (int z : g.neighbors(w) & bm) {
            if (z == a || z == b || g.adjacent(z, a) || g.adjacent(z, b)) continue;
            // chordless a-b-w-z
            for (int p : pb) {
                if (g.adjacent(p, z) && !g.adjacent(p, a) && !g.adjacent(p, b) &&
                    !g.adjacent(p, w) && dull[static_cast<std::size_t>(b)][static_cast<std::size_t>(w)])
                    fire(false, Rule::RuleP4,
                         "P4 path " + std::to_string(a) + "-" + std::to_string(b) + "-" +
                             std::to_string(w) + "-" + std::to_string(z) + " witness " +
                             std::to_string(p));
                if (g.adjacent(p, a) && g.adjacent(p, b) && g.adjacent(p, w) && !g.adjacent(p, z))
                    fire(true, Rule::RuleQ4,
                         "Q4 path " + std::to_string(a) + "-" + std::to_string(b) + "-" +
                             std::to_string(w) + "-" + std::to_string(z) + " witness " +
                             std::to_string(p));
            }
        }
    }
}

}  // namespace

Orientation orient_by_rules(const Graph& g, const BoxPartition& bp) {
    const int n = g.vertex_count();
    Orientation o(n);

    // Rule 0 on every inter-box edge.
    for (auto [u, v] : g.edges()) {
        int bu = bp.box_index(u), bv = bp.box_index(v);
        if (bu == bv) continue;
        const Box& a = bp.boxes[static_cast<std::size_t>(bu)];
        const Box& b = bp.boxes[static_cast<std::size_t>(bv)];
        if (a.odd_label == b.odd_label)
            throw StructureError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                                 " joins two boxes labeled alike; partition invalid");
        if (a.odd_label) o.set(u, v, Rule::Rule0);
        else o.set(v, u, Rule::Rule0);
    }

    // Intra-box edges, box by box.
    for (std::size_t bi = 0; bi < bp.boxes.size(); ++bi) {
        const Box& box = bp.boxes[bi];
        const VertexSet pb = partial_vertices(g, box.members);
        std::vector<int> mem = box.members.to_vector();

        std::vector<std::vector<char>> dull(static_cast<std::size_t>(n),
                                            std::vector<char>(static_cast<std::size_t>(n), 0));
        for (int u : mem)
            for (int v : mem) {
                if (u >= v || !g.adjacent(u, v)) continue;
                bool sharp = false;
                for (int p : pb)
                    if (g.adjacent(p, u) != g.adjacent(p, v)) {
                        sharp = true;
                        break;
                    }
                dull[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = !sharp;
                dull[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = !sharp;
            }

        VertexSet needs_d;  // vertices of dull edges left for Rule D
        std::vector<std::array<int, 2>> d_edges;
        for (int u : mem)
            for (int v : mem) {
                if (u >= v || !g.adjacent(u, v)) continue;
                std::vector<Firing> firings;
                if (!dull[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) {
                    for (int p : pb) {
                        if (g.adjacent(p, u) && !g.adjacent(p, v))
                            firings.push_back(Firing{box.odd_label, Rule::RuleS,
                                                     "S witness " + std::to_string(p) + " sees " +
                                                         std::to_string(u)});
                        if (g.adjacent(p, v) && !g.adjacent(p, u))
                            firings.push_back(Firing{!box.odd_label, Rule::RuleS,
                                                     "S witness " + std::to_string(p) + " sees " +
                                                         std::to_string(v)});
                    }
                } else {
                    scan_patterns(g, box, pb, dull, u, v, u, v, firings);
                    scan_patterns(g, box, pb, dull, v, u, u, v, firings);
                }
                if (firings.empty()) {
                    d_edges.push_back({u, v});
                    continue;
                }
                for (std::size_t i = 1; i < firings.size(); ++i)
                    if (firings[i].u_to_v != firings[0].u_to_v)
                        throw StructureError(
                            "claim (10) fails on edge " + std::to_string(u) + "-" +
                            std::to_string(v) + ": rule " + to_string(firings[0].rule) + " (" +
                            firings[0].detail + ") orients " +
                            (firings[0].u_to_v ? arc_str(u, v) : arc_str(v, u)) + " but rule " +
                            to_string(firings[i].rule) + " (" + firings[i].detail + ") orients " +
                            (firings[i].u_to_v ? arc_str(u, v) : arc_str(v, u)));
                if (firings[0].u_to_v) o.set(u, v, firings[0].rule);
                else o.set(v, u, firings[0].rule);
            }

        if (!d_edges.empty()) {
            InducedSubgraph sub = induced_subgraph(g, box.members);
            auto to_b = comparability_orientation(sub.graph);
            if (!to_b)
                throw StructureError("box " + format_vertices(box.members) +
                                     " admits no transitive orientation; it cannot belong to a "
                                     "valid partition of a class member");
            for (auto [u, v] : d_edges) {
                int iu = sub.from_parent[static_cast<std::size_t>(u)];
                int iv = sub.from_parent[static_cast<std::size_t>(v)];
                if (to_b->has(iu, iv)) o.set(u, v, Rule::RuleD);
                else o.set(v, u, Rule::RuleD);
            }
        }
    }

    if (!o.covers(g)) throw InternalError("rule engine left an edge unoriented");
    TransitivityCheck tc = verify_transitive(g, o);
    if (!tc.ok)
        throw StructureError("claim (11) fails: arcs " + arc_str(tc.triple[0], tc.triple[1]) +
                             ", " + arc_str(tc.triple[1], tc.triple[2]) + " with " +
                             std::to_string(tc.triple[0]) + "," + std::to_string(tc.triple[2]) +
                             " non-adjacent");
    return o;
}

Orientation make_acyclic_transitive(const Graph& g, const Orientation& o) {
    TransitivityCheck tc = verify_transitive(g, o);
    if (!tc.ok || !o.covers(g))
        throw InputError("make_acyclic_transitive requires a total transitive orientation");
    if (verify_acyclic(g, o).ok) return o;
    auto fresh = comparability_orientation(g);
    if (!fresh)
        throw InternalError(
            "graph has a transitive orientation but the forcing method found none");
    return *fresh;
}

SensitiveContext build_sensitive_context(const Graph& g, int x, const std::array<int, 6>& u) {
    // Validate the sensitive pattern itself.
    for (int v : u) g.check_vertex(v);
    g.check_vertex(x);
    VertexSet hexa;
    for (int v : u) hexa.add(v);
    if (hexa.size() != 6 || hexa.contains(x))
        throw InputError("sensitive context: u1..u6 and x must be seven distinct vertices");
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            bool expect = (j == i + 1);
            if (i == 0 && j == 5) continue;  // u1u6 free: P6 or C6
            if (g.adjacent(u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(j)]) != expect)
                throw InputError("sensitive context: u1..u6 do not induce a P6 or C6");
        }
    for (int i = 0; i < 6; ++i) {
        bool expect = (i == 1 || i == 2);
        if (g.adjacent(x, u[static_cast<std::size_t>(i)]) != expect)
            throw InputError("sensitive context: x must see exactly u2 and u3");
    }

    SensitiveContext ctx;
    ctx.x = x;
    ctx.u = u;
    const int u1 = u[0], u2 = u[1], u3 = u[2], u4 = u[3], u5 = u[4], u6 = u[5];
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == x || hexa.contains(v)) continue;
        if (g.adjacent(v, x) && g.adjacent(v, u2) && !g.adjacent(v, u3) && !g.adjacent(v, u5))
            ctx.a_set.add(v);
        if (g.adjacent(v, x) && g.adjacent(v, u3) && !g.adjacent(v, u1) && !g.adjacent(v, u2) &&
            !g.adjacent(v, u4) && !g.adjacent(v, u6))
            ctx.b_set.add(v);
    }
    if (ctx.a_set.intersects(ctx.b_set))
        throw InternalError("sensitive context: A and B overlap");
    // N(x) = {u2,u3} + A + B
    VertexSet nx_expected = ctx.a_set | ctx.b_set | VertexSet::of({u2, u3});
    if (!(g.neighbors(x) == nx_expected))
        throw StructureError("sensitive context: N(x) is not {u2,u3} + A + B; extra neighbor " +
                             format_vertices(g.neighbors(x) - nx_expected));
    for (int a : ctx.a_set)
        for (int b : ctx.b_set)
            if (!g.adjacent(a, b))
                throw StructureError("sensitive context: A vertex " + std::to_string(a) +
                                     " misses B vertex " + std::to_string(b));

    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == x || v == u1 || v == u3 || v == u4 || v == u5 || v == u6) continue;
        if (g.adjacent(v, u1) && g.adjacent(v, u3) && !g.adjacent(v, u4) && !g.adjacent(v, u5) &&
            !g.adjacent(v, u6))
            ctx.u2_class.add(v);
    }
    if (!ctx.u2_class.contains(u2)) throw InternalError("u2 missing from its own class");
    VertexSet x_in_u2 = g.neighbors(x) & ctx.u2_class;
    if (!(x_in_u2 == VertexSet::single(u2)))
        throw StructureError("sensitive context: x has a U2 neighbor besides u2: " +
                             format_vertices(x_in_u2));
    ctx.n2 = ctx.u2_class & g.neighbors(u2);
    ctx.m2 = ctx.u2_class - ctx.n2;
    ctx.m2.remove(u2);
    for (int v : ctx.n2)
        for (int w : ctx.m2)
            if (!g.adjacent(v, w))
                throw StructureError("sensitive context: N2 vertex " + std::to_string(v) +
                                     " misses M2 vertex " + std::to_string(w));
    for (const VertexSet& comp : connected_components(g, ctx.u2_class))
        if (comp.contains(u2)) ctx.d = comp;
    if (!(ctx.d == VertexSet::single(u2)) && !(ctx.d == ctx.u2_class))
        throw StructureError("sensitive context: component of u2 is neither {u2} nor all of U2");

    VertexSet pd = partial_vertices(g, ctx.d);
    pd.remove(x);
    if (!pd.empty()) {
        if (!ctx.m2.empty())
            throw StructureError("sensitive context: P(D)-x nonempty but M2 is not empty");
        for (int z : pd) {
            bool a_case = g.adjacent(z, x) && g.adjacent(z, u1) && g.adjacent(z, u3) &&
                          g.adjacent(z, u5) && g.sees_all(z, ctx.n2) && !g.adjacent(z, u2) &&
                          !g.adjacent(z, u4) && !g.adjacent(z, u6);
            bool b_case = g.adjacent(z, u2) && g.adjacent(z, u4) && !g.adjacent(z, x) &&
                          !g.adjacent(z, u1) && !g.adjacent(z, u3) && !g.neighbors(z).intersects(ctx.n2);
            if (!a_case && !b_case)
                throw StructureError("sensitive context: P(D) vertex " + std::to_string(z) +
                                     " matches neither dichotomy case");
        }
    }
    return ctx;
}

Orientation extend_orientation_sensitive(const Graph& g, const SensitiveContext& ctx,
                                         const Orientation& base) {
    const int x = ctx.x;
    const int u1 = ctx.u[0], u2 = ctx.u[1], u3 = ctx.u[2], u4 = ctx.u[3], u5 = ctx.u[4],
              u6 = ctx.u[5];
    for (auto [u, v] : g.edges()) {
        bool at_x = (u == x || v == x);
        if (at_x && base.oriented(u, v))
            throw InputError("base orientation already orients an edge at x");
        if (!at_x && !base.oriented(u, v))
            throw InputError("base orientation misses an edge of g - x");
    }
    if (!verify_transitive(g, base).ok || !verify_acyclic(g, base).ok)
        throw InputError("base orientation is not transitive and acyclic on g - x");

    auto matches_pattern = [&](const Orientation& o) {
        return o.has(u1, u2) && o.has(u3, u2) && o.has(u3, u4) && o.has(u5, u4) && o.has(u5, u6);
    };
    Orientation ext = base;
    if (!matches_pattern(ext)) {
        ext = ext.reversed();
        if (!matches_pattern(ext))
            throw StructureError(
                "base orientation matches neither hexagon pattern; it cannot be transitive");
    }

    VertexSet pd = partial_vertices(g, ctx.d);
    pd.remove(x);
    if (pd.empty()) {
        VertexSet targets = ctx.m2 | VertexSet::single(u2);
        for (int v : ctx.n2)
            for (int w : targets) {
                if (!g.adjacent(v, w))
                    throw StructureError("N2 vertex " + std::to_string(v) +
                                         " misses reorientation target " + std::to_string(w));
                if (ext.has(w, v)) ext.unset(w, v);
                if (!ext.has(v, w)) ext.set(v, w, Rule::Lemma5);
            }
        TransitivityCheck tc = verify_transitive(g, ext);
        if (!tc.ok)
            throw StructureError("reorientation inside U2 broke transitivity at " +
                                 arc_str(tc.triple[0], tc.triple[1]) + ", " +
                                 arc_str(tc.triple[1], tc.triple[2]));
        if (!verify_acyclic(g, ext).ok)
            throw StructureError("reorientation inside U2 introduced a directed cycle");
    } else {
        for (int v : ctx.n2)
            if (!ext.has(v, u2))
                throw StructureError("claim (3) fails: base orients " + arc_str(u2, v) +
                                     " although P(D)-x is nonempty");
    }

    for (int a : ctx.a_set | VertexSet::single(u3)) ext.set(a, x, Rule::Lemma5);
    for (int b : ctx.b_set | VertexSet::single(u2)) ext.set(x, b, Rule::Lemma5);

    TransitivityCheck tc = verify_transitive(g, ext);
    if (!tc.ok)
        throw StructureError("extended orientation not transitive: " +
                             arc_str(tc.triple[0], tc.triple[1]) + ", " +
                             arc_str(tc.triple[1], tc.triple[2]) + " with endpoints non-adjacent");
    AcyclicityCheck ac = verify_acyclic(g, ext);
    if (!ac.ok) throw StructureError("extended orientation has a directed cycle");
    return ext;
}

std::string serialize_orientation(const Orientation& o) {
    std::ostringstream os;
    for (auto [u, v] : o.arcs()) os << u << ' ' << v << ' ' << to_string(o.provenance(u, v)) << "\n";
    return os.str();
}

Orientation parse_orientation(const Graph& g, const std::string& text) {
    Orientation o(g.vertex_count());
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        int u, v;
        std::string tag;
        if (!(ls >> u >> v >> tag))
            throw InputError("orientation line " + std::to_string(lineno) + " malformed: " + line);
        g.check_vertex(u);
        g.check_vertex(v);
        if (!g.adjacent(u, v))
            throw InputError("orientation line " + std::to_string(lineno) + ": " +
                             std::to_string(u) + "-" + std::to_string(v) + " is not an edge");
        auto rule = rule_from_string(tag);
        if (!rule)
            throw InputError("orientation line " + std::to_string(lineno) + ": unknown rule tag " + tag);
        if (o.oriented(u, v))
            throw InputError("orientation line " + std::to_string(lineno) + ": edge already oriented");
        o.set(u, v, *rule);
    }
    return o;
}

}  // namespace bullberge
