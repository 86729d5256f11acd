#include "bullberge/box_partition.hpp"

#include <algorithm>
#include <sstream>

namespace bullberge {

VertexSet HoleSkeleton::v_star(int parity) const {
    VertexSet out;
    for (int i = 0; i < ell; ++i)
        if (i % 2 == (parity == 1 ? 0 : 1)) out |= v_sets[static_cast<std::size_t>(i)];
    return out;
}

VertexSet HoleSkeleton::d_star(int parity) const {
    VertexSet out;
    for (int i = 0; i < ell; ++i)
        if (i % 2 == (parity == 1 ? 0 : 1)) out |= d_set(i);
    return out;
}

VertexSet HoleSkeleton::c_star(int parity) const {
    return d_star(parity) | (parity == 1 ? a1_star : a2_star);
}

std::string BoxValidation::summary() const {
    if (ok()) return "all box-partition properties hold";
    std::ostringstream os;
    for (const auto& v : violations)
        os << "property " << v.property << " fails on " << format_vertices(v.vertices) << ": "
           << v.detail << "\n";
    return os.str();
}

namespace {

// Does v fit the V_i adjacency pattern: sees all of V_{i-1} and V_{i+1},
// misses every other class (its relation to V_i itself is unconstrained)?
bool fits_v_class(const Graph& g, const std::vector<VertexSet>& vsets, int ell, int i, int v) {
    for (int j = 0; j < ell; ++j) {
        if (j == i) continue;
        bool neighbor_class = (j == (i + 1) % ell) || (j == (i + ell - 1) % ell);
        for (int u : vsets[static_cast<std::size_t>(j)])
            if (g.adjacent(v, u) != neighbor_class) return false;
    }
    return true;
}

}  // namespace

HoleSkeleton build_hole_skeleton(const Graph& g, const Hole& c) {
    if (!is_valid_hole(g, c) || !c.even() || c.length() < 6)
        throw InputError("build_hole_skeleton: need a valid even hole of length >= 6");
    HoleSkeleton sk;
    sk.ell = c.length();
    sk.v_sets.assign(static_cast<std::size_t>(sk.ell), VertexSet{});
    for (int i = 0; i < sk.ell; ++i)
        sk.v_sets[static_cast<std::size_t>(i)].add(c.cycle[static_cast<std::size_t>(i)]);

    VertexSet in_vstar = c.members();
    bool grew = true;
    while (grew) {
        grew = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (in_vstar.contains(v)) continue;
            for (int i = 0; i < sk.ell; ++i)
                if (fits_v_class(g, sk.v_sets, sk.ell, i, v)) {
                    sk.v_sets[static_cast<std::size_t>(i)].add(v);
                    in_vstar.add(v);
                    grew = true;
                    break;
                }
        }
    }

    const VertexSet v1 = sk.v_star(1), v2 = sk.v_star(2);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_vstar.contains(v)) continue;
        if (g.sees_all(v, v2) && g.misses_all(v, v1)) sk.a1_star.add(v);
        else if (g.sees_all(v, v1) && g.misses_all(v, v2)) sk.a2_star.add(v);
    }

    sk.x_sets.assign(static_cast<std::size_t>(sk.ell), VertexSet{});
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (in_vstar.contains(v) || sk.a1_star.contains(v) || sk.a2_star.contains(v)) continue;
        for (int i = 0; i < sk.ell; ++i) {
            const auto& prev = sk.v_sets[static_cast<std::size_t>((i + sk.ell - 1) % sk.ell)];
            const auto& next = sk.v_sets[static_cast<std::size_t>((i + 1) % sk.ell)];
            const auto& prev2 = sk.v_sets[static_cast<std::size_t>((i + sk.ell - 2) % sk.ell)];
            const auto& next2 = sk.v_sets[static_cast<std::size_t>((i + 2) % sk.ell)];
            if (g.sees_all(v, prev) && g.sees_all(v, next) && g.misses_all(v, prev2) &&
                g.misses_all(v, next2)) {
                for (int j = 0; j < i; ++j)
                    if (sk.x_sets[static_cast<std::size_t>(j)].contains(v))
                        throw InternalError("vertex fits two X classes");
                sk.x_sets[static_cast<std::size_t>(i)].add(v);
                break;
            }
        }
    }

    VertexSet placed = in_vstar | sk.a1_star | sk.a2_star;
    for (const auto& x : sk.x_sets) placed |= x;
    sk.z = g.vertices() - placed;

    // claim (1)
    for (int i = 0; i < sk.ell; ++i) {
        const auto& xi = sk.x_sets[static_cast<std::size_t>(i)];
        if (xi.empty()) continue;
        if (sk.ell != 6)
            throw StructureError("claim (1) fails: X_" + std::to_string(i + 1) +
                                 " nonempty but hole length is " + std::to_string(sk.ell));
        const auto& opp = sk.v_sets[static_cast<std::size_t>((i + 3) % sk.ell)];
        for (int x : xi) {
            if (!g.neighbors(x).intersects(opp))
                throw StructureError("claim (1) fails: X vertex " + std::to_string(x) +
                                     " has no neighbor in the opposite class");
            if (g.sees_all(x, opp) && !g.neighbors(x).intersects(sk.v_sets[static_cast<std::size_t>(i)]))
                throw StructureError("claim (1) fails: X vertex " + std::to_string(x) +
                                     " sees the whole opposite class but misses V_" +
                                     std::to_string(i + 1));
        }
    }
    // claim (2): no edge between distinct D_i, D_j of the same parity
    for (int i = 0; i < sk.ell; ++i)
        for (int j = i + 2; j < sk.ell; j += 2)
            for (int u : sk.d_set(i))
                for (int v : sk.d_set(j))
                    if (g.adjacent(u, v))
                        throw StructureError("claim (2) fails: edge " + std::to_string(u) + "-" +
                                             std::to_string(v) + " joins D_" + std::to_string(i + 1) +
                                             " and D_" + std::to_string(j + 1));
    // claim (3)
    for (int parity = 1; parity <= 2; ++parity) {
        const VertexSet& a = parity == 1 ? sk.a1_star : sk.a2_star;
        for (int u : a)
            for (int v : sk.d_star(parity))
                if (g.adjacent(u, v))
                    throw StructureError("claim (3) fails: edge " + std::to_string(u) + "-" +
                                         std::to_string(v) + " joins A_" + std::to_string(parity) +
                                         "* and D_" + std::to_string(parity) + "*");
    }
    // claim (4)
    for (int zvt : sk.z) {
        if (!g.misses_all(zvt, v1) && !g.misses_all(zvt, v2))
            throw StructureError("claim (4) fails: Z vertex " + std::to_string(zvt) +
                                 " has neighbors on both sides of the hole");
        int full = 0;
        for (int i = 0; i < sk.ell; ++i)
            if (g.sees_all(zvt, sk.v_sets[static_cast<std::size_t>(i)])) ++full;
        if (full > 1)
            throw StructureError("claim (4) fails: Z vertex " + std::to_string(zvt) +
                                 " sees all of two classes");
    }
    // claim (5) and the Z split
    const VertexSet c1 = sk.c_star(1), c2 = sk.c_star(2);
    for (int zvt : sk.z) {
        bool sees1 = g.neighbors(zvt).intersects(c1);
        bool sees2 = g.neighbors(zvt).intersects(c2);
        if (sees1 && sees2)
            throw StructureError("claim (5) fails: Z vertex " + std::to_string(zvt) +
                                 " has neighbors in both C_1* and C_2*");
        if (sees2) sk.z1_star.add(zvt);
        if (sees1) sk.z2_star.add(zvt);
    }
    return sk;
}

std::vector<VertexSet> build_levels(const Graph& g, const HoleSkeleton& sk) {
    std::vector<VertexSet> levels;
    levels.push_back(sk.c_star(1));
    VertexSet seen = levels[0];
    while (true) {
        const VertexSet& cur = levels.back();
        VertexSet next = set_neighborhood(g, cur) - seen;
        if (next.empty()) break;
        levels.push_back(next);
        seen |= next;
    }
    if (!(seen == g.vertices())) {
        VertexSet unreached = g.vertices() - seen;
        throw StructureError("level decomposition does not reach " + format_vertices(unreached) +
                             "; the skeleton does not dominate the graph");
    }
    if (levels.size() >= 2 && !(levels[1] == (sk.c_star(2) | sk.z2_star)))
        throw StructureError("level L_2 differs from C_2* plus Z_2*");
    if (!sk.z1_star.empty() &&
        (levels.size() < 3 || !sk.z1_star.is_subset_of(levels[2])))
        throw StructureError("Z_1* is not contained in level L_3");
    return levels;
}

namespace {

int rep_of(const HoleSkeleton& sk, int pos_1based) {
    int idx = ((pos_1based - 1) % sk.ell + sk.ell) % sk.ell;
    return sk.v_sets[static_cast<std::size_t>(idx)].first();
}

void pick_central_aux(const HoleSkeleton& sk, Box& box) {
    int home = -1;  // 1-based D index, 0 for A1*, -2 for A2*
    for (int i = 0; i < sk.ell; ++i)
        if (box.members.is_subset_of(sk.d_set(i))) {
            home = i + 1;
            break;
        }
    if (home == -1 && box.members.is_subset_of(sk.a1_star)) home = 0;
    if (home == -1 && box.members.is_subset_of(sk.a2_star)) home = -2;
    if (home == -1)
        throw StructureError("central box " + format_vertices(box.members) +
                             " lies in no single D_i or A_j*");
    if (home >= 1) {
        box.a = rep_of(sk, home - 1);
        box.b = rep_of(sk, home - 2);
        box.c = rep_of(sk, home + 1);
        box.d = rep_of(sk, home + 2);
    } else if (home == 0) {  // A1* behaves like position 3
        box.a = rep_of(sk, 2);
        box.b = rep_of(sk, 1);
        box.c = rep_of(sk, 4);
        box.d = rep_of(sk, 5);
    } else {  // A2* behaves like position 2
        box.a = rep_of(sk, 1);
        box.b = rep_of(sk, 0);
        box.c = rep_of(sk, 3);
        box.d = rep_of(sk, 4);
    }
}

void pick_peripheral_aux(const Graph& g, const std::vector<VertexSet>& levels, Box& box) {
    const VertexSet pb = partial_vertices(g, box.members);
    const VertexSet& prev = levels[static_cast<std::size_t>(box.level - 2)];
    for (int cand : prev) {
        if (!g.sees_all(cand, box.members) || !g.misses_all(cand, pb)) continue;
        box.a = cand;
        break;
    }
    if (box.a < 0)
        throw StructureError("no vertex of the previous level sees all of peripheral box " +
                             format_vertices(box.members) + " while missing its partial vertices");
    for (int cand : g.neighbors(box.a)) {
        if (box.members.contains(cand) || !g.misses_all(cand, box.members)) continue;
        box.b = cand;
        break;
    }
    if (box.b < 0)
        throw StructureError("no neighbor of the anchor misses all of peripheral box " +
                             format_vertices(box.members));
}

}  // namespace

BoxPartition build_box_partition(const Graph& g) {
    auto hole = find_shortest_even_hole(g);
    if (!hole) throw StructureError("no even hole of length >= 6; a box partition needs one");
    if (auto sv = find_sensitive_vertex(g))
        throw StructureError("sensitive vertex " + std::to_string(sv->x) +
                             " present; peel it before the box partition");
    BoxPartition bp;
    bp.skeleton = build_hole_skeleton(g, *hole);
    bp.levels = build_levels(g, bp.skeleton);
    const VertexSet central = bp.skeleton.c_star(1) | bp.skeleton.c_star(2);
    bp.box_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t j = 0; j < bp.levels.size(); ++j) {
        for (const VertexSet& comp : connected_components(g, bp.levels[j])) {
            Box box;
            box.members = comp;
            box.level = static_cast<int>(j) + 1;
            box.odd_label = (box.level % 2) == 1;
            bool any_central = comp.intersects(central);
            bool all_central = comp.is_subset_of(central);
            if (any_central != all_central)
                throw StructureError("box " + format_vertices(comp) +
                                     " mixes central and peripheral vertices");
            box.central = all_central;
            if (box.central) pick_central_aux(bp.skeleton, box);
            else pick_peripheral_aux(g, bp.levels, box);
            for (int v : comp) bp.box_of[static_cast<std::size_t>(v)] = static_cast<int>(bp.boxes.size());
            bp.boxes.push_back(std::move(box));
        }
    }
    BoxValidation check = validate_box_partition(g, bp);
    if (!check.ok()) throw StructureError(check.summary());
    return bp;
}

BoxValidation validate_box_partition(const Graph& g, const BoxPartition& bp) {
    BoxValidation out;
    auto add = [&](const std::string& prop, std::vector<int> vs, const std::string& detail) {
        out.violations.push_back(BoxViolation{prop, std::move(vs), detail});
    };

    // (i) no edge between two boxes with the same label
    for (std::size_t i = 0; i < bp.boxes.size(); ++i)
        for (std::size_t j = i + 1; j < bp.boxes.size(); ++j) {
            if (bp.boxes[i].odd_label != bp.boxes[j].odd_label) continue;
            for (int u : bp.boxes[i].members)
                if (g.neighbors(u).intersects(bp.boxes[j].members)) {
                    int v = (g.neighbors(u) & bp.boxes[j].members).first();
                    add("(i)", {u, v}, "edge joins two boxes labeled alike");
                }
        }
    // (ii) every box connected
    for (const Box& b : bp.boxes)
        if (connected_components(g, b.members).size() != 1)
            add("(ii)", b.members.to_vector(), "box induces a disconnected subgraph");
    // (iii) at least six central boxes
    {
        int central = 0;
        for (const Box& b : bp.boxes) central += b.central ? 1 : 0;
        if (central < 6)
            add("(iii)", {}, "only " + std::to_string(central) + " central boxes");
    }
    // (iv) / (v) auxiliary vertices
    for (const Box& b : bp.boxes) {
        const VertexSet pb = partial_vertices(g, b.members);
        if (b.central) {
            bool ok = b.a >= 0 && b.b >= 0 && b.c >= 0 && b.d >= 0;
            ok = ok && g.sees_all(b.a, b.members) && g.misses_all(b.a, pb);
            ok = ok && g.sees_all(b.c, b.members) && g.misses_all(b.c, pb);
            ok = ok && g.misses_all(b.b, b.members) && g.misses_all(b.d, b.members);
            ok = ok && g.adjacent(b.a, b.b) && g.adjacent(b.c, b.d);
            ok = ok && !g.adjacent(b.a, b.c) && !g.adjacent(b.a, b.d) && !g.adjacent(b.b, b.c) &&
                 !g.adjacent(b.b, b.d);
            if (!ok) add("(iv)", {b.a, b.b, b.c, b.d}, "central auxiliary pattern violated");
        } else {
            bool ok = b.a >= 0 && b.b >= 0;
            ok = ok && g.sees_all(b.a, b.members) && g.misses_all(b.a, pb);
            ok = ok && g.misses_all(b.b, b.members) && g.adjacent(b.a, b.b);
            if (!ok) add("(v)", {b.a, b.b}, "peripheral auxiliary pattern violated");
        }
        // (vi) comparable trace neighborhoods on peripheral boxes
        if (!b.central) {
            for (int u : b.members)
                for (int v : b.members) {
                    if (u >= v || !g.adjacent(u, v)) continue;
                    VertexSet nu = g.neighbors(u) & pb;
                    VertexSet nv = g.neighbors(v) & pb;
                    if (!nu.is_subset_of(nv) && !nv.is_subset_of(nu))
                        add("(vi)", {u, v}, "incomparable P(B) neighborhoods");
                }
        }
        // (vii) forbidden chordless u-v-w with adjacent x,y in P(B)
        for (int v : b.members)
            for (int u : g.neighbors(v) & b.members)
                for (int w : g.neighbors(v) & b.members) {
                    if (u == w || g.adjacent(u, w)) continue;
                    for (int x : pb) {
                        if (!g.adjacent(x, u) || g.adjacent(x, v) || g.adjacent(x, w)) continue;
                        for (int y : pb) {
                            if (y == x || !g.adjacent(x, y)) continue;
                            if (g.adjacent(y, u) && g.adjacent(y, v) && !g.adjacent(y, w))
                                add("(vii)", {u, v, w, x, y}, "forbidden configuration in a box");
                        }
                    }
                }
        // Lemma 4 consequence: no induced P4 x-u-v-y with opposing partial vertices.
        for (int u : b.members)
            for (int v : g.neighbors(u) & b.members) {
                if (u == v) continue;
                for (int x : pb) {
                    if (!g.adjacent(x, u) || g.adjacent(x, v)) continue;
                    for (int y : pb) {
                        if (y == x) continue;
                        if (g.adjacent(y, v) && !g.adjacent(y, u) && !g.adjacent(x, y))
                            add("lemma4", {x, u, v, y}, "induced P4 across a box edge");
                    }
                }
            }
    }
    return out;
}

std::string serialize_box_partition(const BoxPartition& bp) {
    std::ostringstream os;
    os << "boxpartition v1 " << bp.boxes.size() << "\n";
    for (std::size_t i = 0; i < bp.boxes.size(); ++i) {
        const Box& b = bp.boxes[i];
        os << "box " << i << " level " << b.level << " label " << (b.odd_label ? "odd" : "even")
           << " kind " << (b.central ? "central" : "peripheral") << " aux " << b.a << ' ' << b.b
           << ' ' << b.c << ' ' << b.d << " members";
        for (int v : b.members) os << ' ' << v;
        os << "\n";
    }
    return os.str();
}

BoxPartition parse_box_partition(const Graph& g, const std::string& text) {
    std::istringstream is(text);
    std::string tag, version;
    std::size_t count = 0;
    is >> tag >> version >> count;
    if (tag != "boxpartition" || version != "v1")
        throw InputError("unrecognized box partition header");
    BoxPartition bp;
    bp.box_of.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw, label, kind;
        std::size_t idx;
        Box b;
        ls >> kw >> idx;
        if (kw != "box") throw InputError("expected 'box' line in partition: " + line);
        ls >> kw >> b.level;          // level j
        ls >> kw >> label;            // label odd|even
        ls >> kw >> kind;             // kind central|peripheral
        ls >> kw >> b.a >> b.b >> b.c >> b.d;  // aux a b c d
        b.odd_label = label == "odd";
        b.central = kind == "central";
        ls >> kw;  // members
        int v;
        while (ls >> v) {
            g.check_vertex(v);
            b.members.add(v);
            bp.box_of[static_cast<std::size_t>(v)] = static_cast<int>(bp.boxes.size());
        }
        bp.boxes.push_back(std::move(b));
    }
    if (bp.boxes.size() != count) throw InputError("box count mismatch in partition file");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (bp.box_of[static_cast<std::size_t>(v)] < 0)
            throw InputError("vertex " + std::to_string(v) + " missing from the partition");
    return bp;
}

}  // namespace bullberge
