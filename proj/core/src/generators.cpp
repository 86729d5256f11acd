#include "bullberge/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "bullberge/decomposition.hpp"

namespace bullberge {

InstanceSpec parse_instance_spec(const std::string& text, std::uint64_t seed) {
    InstanceSpec spec;
    spec.seed = seed;
    std::stringstream ss(text);
    std::string piece;
    bool first = true;
    while (std::getline(ss, piece, ':')) {
        if (first) {
            spec.name = piece;
            first = false;
        } else {
            try {
                spec.args.push_back(std::stoll(piece));
            } catch (...) {
                throw InputError("bad generator argument '" + piece + "' in spec " + text);
            }
        }
    }
    if (spec.name.empty()) throw InputError("empty generator spec");
    return spec;
}

Graph make_bull() {
    // r-yxz-s on vertices 0..4
    return Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

Graph make_lock() { return f_graph(FKind::F2); }

Graph make_wheel(int hole_len) {
    if (hole_len < 6 || hole_len % 2 != 0) throw InputError("wheel needs an even hole length >= 6");
    Graph g(hole_len + 1);
    for (int i = 0; i < hole_len; ++i) {
        g.add_edge(i, (i + 1) % hole_len);
        g.add_edge(i, hole_len);
    }
    return g;
}

Graph make_double_broom() {
    Graph g(8);
    for (int i = 0; i + 1 < 4; ++i) g.add_edge(i, i + 1);
    for (int i = 0; i < 4; ++i) {
        g.add_edge(i, 4);
        g.add_edge(i, 5);
    }
    g.add_edge(4, 6);
    g.add_edge(5, 7);
    return g;
}

Graph make_spiked(StructureKind kind) {
    if (kind != StructureKind::SpikedF1 && kind != StructureKind::SpikedF2)
        throw InputError("make_spiked takes SpikedF1 or SpikedF2");
    Graph f = f_graph(kind == StructureKind::SpikedF1 ? FKind::F1 : FKind::F2);
    const int ws = f.vertex_count();
    Graph g(ws + 2);
    for (auto [u, v] : f.edges()) g.add_edge(u, v);
    for (int i = 0; i < ws; ++i) g.add_edge(i, ws);  // a sees all of W
    g.add_edge(ws, ws + 1);                          // and b
    return g;
}

std::vector<int> random_weights(int n, int max_w, std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> dist(1, max_w);
    std::vector<int> w(static_cast<std::size_t>(n));
    for (auto& x : w) x = dist(rng);
    return w;
}

namespace {

int rnd_int(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}
bool rnd_chance(std::mt19937_64& rng, double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p;
}

bool has_c5(const Graph& g) { return find_hole_with_parity(g, 1, 5, 5).has_value(); }

struct EdgeBag {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    int add_vertex() { return n++; }
    void link(int u, int v) { edges.emplace_back(u, v); }
    void link_all(int u, const std::vector<int>& vs) {
        for (int v : vs) link(u, v);
    }
    Graph build() const {
        Graph g(n);
        for (auto [u, v] : edges)
            if (!g.adjacent(u, v)) g.add_edge(u, v);
        return g;
    }
};

GeneratedInstance gen_spiked_decorated(StructureKind kind, std::uint64_t seed) {
    const FKind fk = kind == StructureKind::SpikedF1 ? FKind::F1 : FKind::F2;
    const Graph f = f_graph(fk);
    const int ws = f.vertex_count();
    // Partial-vertex neighborhoods consistent with a bull-reducible C5-free
    // host, from the low-red rows of the type table plus their symmetric
    // images. F1 labels: u1..u5 = 0..4; F2: u1..u6 = 0..5.
    static const std::vector<std::vector<int>> f1_masks = {
        {0}, {3}, {0, 2}, {1, 3}, {0, 1, 4}, {2, 3, 4}, {0, 1, 3, 4},
        {0, 2, 3, 4}, {1, 4}, {2, 4}, {0, 1, 2}, {1, 2, 3}};
    static const std::vector<std::vector<int>> f2_masks = {
        {0}, {1}, {2}, {3}, {0, 2}, {1, 3}, {2, 4}, {3, 4},
        {0, 2, 4}, {1, 3, 4}, {0, 2, 4, 5}, {1, 3, 4, 5}};
    const auto& masks = fk == FKind::F1 ? f1_masks : f2_masks;

    for (int attempt = 0; attempt < 300; ++attempt) {
        std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(attempt));
        EdgeBag bag;
        std::vector<int> w_ids;
        for (int i = 0; i < ws; ++i) w_ids.push_back(bag.add_vertex());
        for (auto [u, v] : f.edges()) bag.link(u, v);
        int a = bag.add_vertex();
        int b = bag.add_vertex();
        bag.link_all(a, w_ids);
        bag.link(a, b);

        std::vector<int> t_all{a};       // T members (a plus extras)
        std::vector<int> t_in_a{a};      // members of A
        std::vector<int> p1_ids, p2_ids;

        int extra_t = -1;
        bool extra_t_in_a = false;
        if (rnd_chance(rng, 0.5)) {
            extra_t = bag.add_vertex();
            bag.link_all(extra_t, w_ids);
            t_all.push_back(extra_t);
            extra_t_in_a = rnd_chance(rng, 0.4);
            if (extra_t_in_a) {
                bag.link(extra_t, b);
                t_in_a.push_back(extra_t);
            }
            if (rnd_chance(rng, 0.5)) bag.link(extra_t, a);
        }
        bool extra_t_is_y = extra_t >= 0 && !extra_t_in_a && rnd_chance(rng, 0.7);

        int np = rnd_int(rng, 0, 3);
        std::vector<std::pair<int, bool>> p_verts;  // id, is_p1
        for (int i = 0; i < np; ++i) {
            const auto& mask = masks[static_cast<std::size_t>(
                rnd_int(rng, 0, static_cast<int>(masks.size()) - 1))];
            int p = bag.add_vertex();
            for (int m : mask) bag.link(p, m);
            VertexSet mset;
            for (int m : mask) mset.add(m);
            bool stable = is_stable_set(f, mset);
            p_verts.emplace_back(p, stable);
            if (stable) {
                p1_ids.push_back(p);
                for (int t : t_all) bag.link(p, t);  // every T vertex sees P1
            } else {
                p2_ids.push_back(p);
                for (int t : t_in_a) bag.link(p, t);  // A sees all of P
                if (extra_t >= 0 && !extra_t_in_a && !extra_t_is_y && rnd_chance(rng, 0.5))
                    bag.link(p, extra_t);
            }
        }

        std::vector<int> x_ids;
        if (!p1_ids.empty()) {
            int nchain = rnd_int(rng, 0, 2);
            for (int i = 0; i < nchain; ++i) {
                int root = p1_ids[static_cast<std::size_t>(
                    rnd_int(rng, 0, static_cast<int>(p1_ids.size()) - 1))];
                int len = rnd_int(rng, 1, 2);
                int prev = root;
                for (int j = 0; j < len; ++j) {
                    int zv = bag.add_vertex();
                    bag.link(zv, prev);
                    for (int t : t_in_a) bag.link(zv, t);  // A sees all of X
                    x_ids.push_back(zv);
                    prev = zv;
                }
            }
        }
        if (extra_t_is_y) {
            // Y needs a complement partner in P + X; with no X and no non-
            // adjacent P2 the vertex stays plain T - A, which is fine too.
            for (int t2 : t_all)
                if (t2 != extra_t && rnd_chance(rng, 0.5)) bag.link(extra_t, t2);
        }

        Graph g = bag.build();
        if (!is_bull_reducible(g).reducible || has_c5(g)) continue;
        GeneratedInstance out{std::move(g),
                              kind == StructureKind::SpikedF1 ? "spiked-f1" : "spiked-f2",
                              {}};
        std::ostringstream wlist;
        for (int i = 0; i < ws; ++i) wlist << (i ? " " : "") << w_ids[static_cast<std::size_t>(i)];
        out.meta["w"] = wlist.str();
        out.meta["a"] = std::to_string(a);
        out.meta["b"] = std::to_string(b);
        return out;
    }
    throw StructureError("spiked-deco generation budget exhausted");
}

GeneratedInstance gen_blowup(int ell, std::uint64_t seed) {
    for (int attempt = 0; attempt < 300; ++attempt) {
        std::mt19937_64 rng(seed * 7919ULL + static_cast<std::uint64_t>(attempt));
        int len = ell;
        if (len <= 0) len = 6 + 2 * rnd_int(rng, 0, 2);
        EdgeBag bag;
        std::vector<std::vector<int>> classes(static_cast<std::size_t>(len));
        for (int i = 0; i < len; ++i) {
            int size = rnd_chance(rng, 0.65) ? 1 : rnd_int(rng, 2, 3);
            bool clique = rnd_chance(rng, 0.7);
            for (int k = 0; k < size; ++k) {
                int v = bag.add_vertex();
                for (int prev : classes[static_cast<std::size_t>(i)])
                    if (clique) bag.link(v, prev);
                classes[static_cast<std::size_t>(i)].push_back(v);
            }
        }
        for (int i = 0; i < len; ++i)
            for (int u : classes[static_cast<std::size_t>(i)])
                for (int v : classes[static_cast<std::size_t>((i + 1) % len)]) bag.link(u, v);

        auto link_class = [&](int v, int idx) {
            bag.link_all(v, classes[static_cast<std::size_t>(((idx % len) + len) % len)]);
        };

        std::vector<int> a_verts;
        for (int side = 1; side <= 2; ++side)
            if (rnd_chance(rng, 0.3)) {
                int v = bag.add_vertex();
                for (int i = side - 1; i < len; i += 2) link_class(v, i);
                for (int prev : a_verts)
                    if (rnd_chance(rng, 0.5)) bag.link(v, prev);
                a_verts.push_back(v);
            }
        if (len == 6 && rnd_chance(rng, 0.25)) {
            // X-type vertex at position i: full on both neighbor classes,
            // empty on i +- 2, partial on the opposite class.
            int i = rnd_int(rng, 0, 5);
            const auto& opp = classes[static_cast<std::size_t>((i + 3) % 6)];
            int v = bag.add_vertex();
            link_class(v, i - 1);
            link_class(v, i + 1);
            if (opp.size() >= 2) {
                int take = rnd_int(rng, 1, static_cast<int>(opp.size()) - 1);
                for (int k = 0; k < take; ++k) bag.link(v, opp[static_cast<std::size_t>(k)]);
            } else {
                bag.link(v, opp[0]);
                bag.link(v, classes[static_cast<std::size_t>(i)][0]);
            }
        }
        int ntrees = rnd_int(rng, 0, 2);
        for (int t = 0; t < ntrees; ++t) {
            int anchor = rnd_int(rng, 0, len - 1);
            int root = bag.add_vertex();
            link_class(root, anchor);
            if (rnd_chance(rng, 0.35)) {  // two-vertex peripheral box
                int mate = bag.add_vertex();
                link_class(mate, anchor);
                bag.link(root, mate);
            }
            int depth = rnd_int(rng, 0, 2);
            int prev = root;
            for (int d = 0; d < depth; ++d) {
                int child = bag.add_vertex();
                bag.link(child, prev);
                prev = child;
            }
        }

        Graph g = bag.build();
        if (g.vertex_count() > 20) continue;
        ClassCheck cc = check_class(g, true);
        if (!cc.in_class_b()) continue;
        if (!find_shortest_even_hole(g)) continue;
        if (find_sensitive_vertex(g)) continue;
        GeneratedInstance out{std::move(g), "blowup", {}};
        out.meta["ell"] = std::to_string(len);
        return out;
    }
    throw StructureError("blowup generation budget exhausted");
}

GeneratedInstance gen_sensitive(int ell, std::uint64_t seed) {
    for (int attempt = 0; attempt < 300; ++attempt) {
        std::mt19937_64 rng(seed * 104729ULL + static_cast<std::uint64_t>(attempt));
        int len = ell;
        if (len <= 0) len = 6 + 2 * rnd_int(rng, 0, 1);
        EdgeBag bag;
        std::vector<int> hole;
        for (int i = 0; i < len; ++i) hole.push_back(bag.add_vertex());
        for (int i = 0; i < len; ++i) bag.link(hole[static_cast<std::size_t>(i)], hole[static_cast<std::size_t>((i + 1) % len)]);
        int x = bag.add_vertex();
        bag.link(x, hole[1]);
        bag.link(x, hole[2]);

        int av = -1, bv = -1;
        if (rnd_chance(rng, 0.35)) {
            av = bag.add_vertex();  // sees x,u2; misses u3,u5
            bag.link(av, x);
            bag.link(av, hole[1]);
            if (rnd_chance(rng, 0.5)) bag.link(av, hole[0]);
        }
        if (rnd_chance(rng, 0.35)) {
            bv = bag.add_vertex();  // sees x,u3; misses u1,u2,u4,u6
            bag.link(bv, x);
            bag.link(bv, hole[2]);
        }
        if (av >= 0 && bv >= 0) bag.link(av, bv);  // A-B completeness
        if (rnd_chance(rng, 0.3)) {
            int u2c = bag.add_vertex();  // U2 member: sees u1,u3, misses u4,u5,u6 and x
            bag.link(u2c, hole[0]);
            bag.link(u2c, hole[2]);
            if (rnd_chance(rng, 0.6)) bag.link(u2c, hole[1]);
        }

        Graph g = bag.build();
        ClassCheck cc = check_class(g, true);
        if (!cc.in_class_b()) continue;
        if (!find_sensitive_vertex(g)) continue;
        GeneratedInstance out{std::move(g), "sensitive", {}};
        out.meta["x"] = std::to_string(x);
        std::ostringstream us;
        for (int i = 0; i < 6; ++i) us << (i ? " " : "") << hole[static_cast<std::size_t>(i)];
        out.meta["u"] = us.str();
        out.meta["ell"] = std::to_string(len);
        return out;
    }
    throw StructureError("sensitive generation budget exhausted");
}

GeneratedInstance gen_chordal(int n, std::uint64_t seed) {
    for (int attempt = 0; attempt < 300; ++attempt) {
        std::mt19937_64 rng(seed * 65537ULL + static_cast<std::uint64_t>(attempt));
        Graph g(n);
        std::vector<std::pair<int, int>> intervals;
        for (int v = 0; v < n; ++v) {
            int l = rnd_int(rng, 0, 3 * n);
            int r = l + rnd_int(rng, 1, n);
            intervals.emplace_back(l, r);
        }
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (intervals[static_cast<std::size_t>(u)].first <= intervals[static_cast<std::size_t>(v)].second &&
                    intervals[static_cast<std::size_t>(v)].first <= intervals[static_cast<std::size_t>(u)].second)
                    g.add_edge(u, v);
        if (!is_bull_reducible(g).reducible) continue;
        return GeneratedInstance{std::move(g), "chordal", {}};
    }
    throw StructureError("chordal generation budget exhausted");
}

GeneratedInstance gen_class_random(int n, int percent, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 7ULL + 13ULL);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rnd_int(rng, 0, 99) < percent) g.add_edge(u, v);
    return GeneratedInstance{std::move(g), "class-random", {}};
}

GeneratedInstance gen_wrapped(int n, std::uint64_t seed) {
    for (int attempt = 0; attempt < 300; ++attempt) {
        std::uint64_t sub = seed * 31337ULL + static_cast<std::uint64_t>(attempt);
        std::mt19937_64 rng(sub);
        GeneratedInstance base = rnd_chance(rng, 0.5) ? gen_blowup(0, sub) : gen_chordal(std::max(n, 6), sub);
        const Graph& g0 = base.graph;
        int v = rnd_int(rng, 0, g0.vertex_count() - 1);
        int size = rnd_int(rng, 2, 3);
        bool clique = rnd_chance(rng, 0.6);
        // Substitute v by a small module with v's neighborhood.
        Graph g(g0.vertex_count() + size - 1);
        for (auto [p, q] : g0.edges())
            if (p != v && q != v) g.add_edge(p, q);
        std::vector<int> module{v};
        for (int k = 1; k < size; ++k) module.push_back(g0.vertex_count() + k - 1);
        for (int m : module)
            for (int u : g0.neighbors(v)) g.add_edge(m, u);
        if (clique)
            for (std::size_t i = 0; i < module.size(); ++i)
                for (std::size_t j = i + 1; j < module.size(); ++j)
                    g.add_edge(module[i], module[j]);
        if (g.vertex_count() > 20) continue;
        if (!check_class(g, false).in_base_class()) continue;
        GeneratedInstance out{std::move(g), "wrapped:" + base.structure, {}};
        return out;
    }
    throw StructureError("wrapped generation budget exhausted");
}

long long arg_or(const InstanceSpec& s, std::size_t i, long long dflt) {
    return i < s.args.size() ? s.args[i] : dflt;
}

}  // namespace

GeneratedInstance generate(const InstanceSpec& spec) {
    const std::string& name = spec.name;
    if (name == "hole") {
        int len = static_cast<int>(arg_or(spec, 0, 6));
        if (len < 5) throw InputError("hole length must be >= 5");
        return {Graph::cycle(len), "hole", {{"len", std::to_string(len)}}};
    }
    if (name == "path") {
        int len = static_cast<int>(arg_or(spec, 0, 4));
        return {Graph::path(len), "path", {}};
    }
    if (name == "bull") return {make_bull(), "bull", {}};
    if (name == "lock") return {make_lock(), "lock", {}};
    if (name == "double-broom") return {make_double_broom(), "double-broom", {}};
    if (name == "wheel") return {make_wheel(static_cast<int>(arg_or(spec, 0, 6))), "wheel", {}};
    if (name == "spiked") {
        int which = static_cast<int>(arg_or(spec, 0, 1));
        if (which != 1 && which != 2) throw InputError("spiked takes 1 or 2");
        return {make_spiked(which == 1 ? StructureKind::SpikedF1 : StructureKind::SpikedF2),
                which == 1 ? "spiked-f1" : "spiked-f2",
                {}};
    }
    if (name == "spiked-deco") {
        int which = static_cast<int>(arg_or(spec, 0, 1));
        if (which != 1 && which != 2) throw InputError("spiked-deco takes 1 or 2");
        return gen_spiked_decorated(which == 1 ? StructureKind::SpikedF1 : StructureKind::SpikedF2,
                                    spec.seed);
    }
    if (name == "blowup") return gen_blowup(static_cast<int>(arg_or(spec, 0, 0)), spec.seed);
    if (name == "sensitive") return gen_sensitive(static_cast<int>(arg_or(spec, 0, 0)), spec.seed);
    if (name == "chordal") return gen_chordal(static_cast<int>(arg_or(spec, 0, 10)), spec.seed);
    if (name == "class-random")
        return gen_class_random(static_cast<int>(arg_or(spec, 0, 8)),
                                static_cast<int>(arg_or(spec, 1, 30)), spec.seed);
    if (name == "wrapped") return gen_wrapped(static_cast<int>(arg_or(spec, 0, 12)), spec.seed);
    throw InputError("unknown generator '" + name + "'");
}

}  // namespace bullberge
