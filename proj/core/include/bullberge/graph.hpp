#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "bullberge/errors.hpp"

namespace bullberge {

#ifndef BULLBERGE_MAX_VERTICES
#define BULLBERGE_MAX_VERTICES 64
#endif

// Vertex capacity is a compile-time constant so that vertex sets are plain
// fixed-width bitsets. Set intersections dominate every recognition routine.
inline constexpr int kMaxVertices = BULLBERGE_MAX_VERTICES;
static_assert(kMaxVertices >= 16 && kMaxVertices <= 256,
              "BULLBERGE_MAX_VERTICES must be in [16, 256]");

// A set of vertex identifiers in [0, kMaxVertices).
class VertexSet {
    static constexpr int kWords = (kMaxVertices + 63) / 64;
    std::array<std::uint64_t, kWords> w_{};

public:
    VertexSet() = default;

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }
    static VertexSet first_n(int n) {
        VertexSet s;
        for (int v = 0; v < n; ++v) s.add(v);
        return s;
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    bool contains(int v) const {
        return (w_[static_cast<unsigned>(v) >> 6] >> (v & 63)) & 1u;
    }
    void add(int v) {
        if (v < 0 || v >= kMaxVertices) throw InputError("vertex id out of range: " + std::to_string(v));
        w_[static_cast<unsigned>(v) >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void remove(int v) { w_[static_cast<unsigned>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

    int size() const {
        int c = 0;
        for (auto x : w_) c += std::popcount(x);
        return c;
    }
    bool empty() const {
        for (auto x : w_)
            if (x) return false;
        return true;
    }
    // Smallest member, or -1 when empty.
    int first() const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    VertexSet& operator|=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] |= o.w_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= o.w_[i];
        return *this;
    }
    VertexSet& operator-=(const VertexSet& o) {
        for (int i = 0; i < kWords; ++i) w_[i] &= ~o.w_[i];
        return *this;
    }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) { return a.w_ == b.w_; }
    friend bool operator<(const VertexSet& a, const VertexSet& b) { return a.w_ < b.w_; }

    bool is_subset_of(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & ~o.w_[i]) return false;
        return true;
    }
    bool intersects(const VertexSet& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w_[i] & o.w_[i]) return true;
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    class iterator {
        const VertexSet* s_ = nullptr;
        int v_ = -1;
        void advance() {
            for (++v_; v_ < kMaxVertices; ++v_)
                if (s_->contains(v_)) return;
            v_ = kMaxVertices;
        }

    public:
        iterator() = default;
        iterator(const VertexSet* s, int v) : s_(s), v_(v) {
            if (v_ < kMaxVertices && !s_->contains(v_)) advance();
        }
        int operator*() const { return v_; }
        iterator& operator++() {
            advance();
            return *this;
        }
        bool operator!=(const iterator& o) const { return v_ != o.v_; }
    };
    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, kMaxVertices); }
};

// Undirected simple graph with dense vertex ids 0..n-1 and bitset adjacency.
// Construct, add edges, then treat as immutable; every operation below takes
// a const reference and never mutates its input.
class Graph {
    int n_ = 0;
    std::vector<VertexSet> adj_;

public:
    Graph() = default;
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
        if (n < 0 || n > kMaxVertices)
            throw InputError("vertex count " + std::to_string(n) + " exceeds capacity " +
                             std::to_string(kMaxVertices));
    }
    static Graph from_edges(int n, std::initializer_list<std::pair<int, int>> edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }
    static Graph cycle(int n) {
        Graph g(n);
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
        return g;
    }
    static Graph path(int n) {
        Graph g(n);
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
        return g;
    }
    static Graph complete(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    int vertex_count() const { return n_; }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
    }
    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
        adj_[static_cast<std::size_t>(u)].add(v);
        adj_[static_cast<std::size_t>(v)].add(u);
    }
    bool adjacent(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    const VertexSet& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    VertexSet vertices() const { return VertexSet::first_n(n_); }

    int edge_count() const {
        int twice = 0;
        for (const auto& a : adj_) twice += a.size();
        return twice / 2;
    }
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    // True iff v has both a neighbor and a non-neighbor in s (v itself not counted).
    bool partial_on(int v, const VertexSet& s) const {
        VertexSet t = s;
        t.remove(v);
        if (t.empty()) return false;
        const VertexSet& nb = neighbors(v);
        return t.intersects(nb) && !t.is_subset_of(nb);
    }
    bool sees_all(int v, const VertexSet& s) const {
        VertexSet t = s;
        t.remove(v);
        return t.is_subset_of(neighbors(v));
    }
    bool misses_all(int v, const VertexSet& s) const {
        VertexSet t = s;
        t.remove(v);
        return !t.intersects(neighbors(v));
    }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }
};

// Induced subgraph plus the id mapping needed to lift certificates back.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;    // new id -> old id, ascending
    std::vector<int> from_parent;  // old id -> new id, -1 when dropped
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);
Graph remove_vertex(const Graph& g, int v, std::vector<int>* to_parent = nullptr);

// Maximal connected subsets of s in g[s], each returned once, ordered by
// smallest member.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& s);
std::vector<VertexSet> connected_components(const Graph& g);

// All chordless (induced) a-b paths of length <= max_len edges. A sequence
// qualifies iff consecutive vertices are adjacent and all other pairs,
// endpoints included, are not. Exhaustive DFS with on-path chord pruning.
std::vector<std::vector<int>> chordless_paths(const Graph& g, int a, int b, int max_len);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_stable_set(const Graph& g, const VertexSet& s);

// Vertices of V(g) - b with a neighbor and a non-neighbor in b.
VertexSet partial_vertices(const Graph& g, const VertexSet& b);

// Neighborhood of a set: all vertices outside s adjacent to something in s.
VertexSet set_neighborhood(const Graph& g, const VertexSet& s);

std::string format_vertices(const VertexSet& s);
std::string format_vertices(const std::vector<int>& vs);

}  // namespace bullberge
