#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bullberge/graph.hpp"
#include "bullberge/orientation.hpp"

namespace bullberge {

// Partition of V(G) into stable sets.
struct Coloring {
    std::vector<VertexSet> classes;

    int count() const { return static_cast<int>(classes.size()); }
    int color_of(int v) const;
    bool proper_cover(const Graph& g) const;  // stable, disjoint, covers V
};

// Stable sets with nonnegative weights covering each vertex x to at least
// w(x): w(x) <= sum of W(S_i) over classes containing x.
struct WeightedColoring {
    std::vector<VertexSet> classes;
    std::vector<long long> weights;

    long long total_weight() const;
    bool feasible(const Graph& g, const std::vector<int>& w) const;
};

// Audit trail of the recursive driver.
struct TraceNode {
    enum class Branch { Homogeneous, WeaklyChordal, BoxOrientation, SensitivePeel, BaseCase };
    Branch branch;
    std::string detail;
    std::vector<TraceNode> children;
};
std::string to_string(TraceNode::Branch b);
std::string format_trace(const TraceNode& t, int indent = 0);

// ---- brute-force oracles ------------------------------------------------

inline constexpr int kDefaultOracleCap = 20;

// Exact chromatic number by branch and bound with a clique lower bound.
// Refuses graphs above the cap.
std::pair<int, Coloring> oracle_chromatic(const Graph& g, int cap = kDefaultOracleCap);

// Maximum clique via pivoted enumeration.
std::pair<int, VertexSet> oracle_clique(const Graph& g);

// Maximum-weight clique (weights >= 0).
std::pair<long long, VertexSet> max_weight_clique(const Graph& g, const std::vector<int>& w);

// ---- coloring operations -------------------------------------------------

// Non-adjacent pair whose chordless connecting paths all have even length
// (pairs with no connecting path qualify). Exhaustive path enumeration.
std::optional<std::pair<int, int>> find_even_pair(const Graph& g);

// Optimal coloring of a weakly chordal graph by repeated even-pair
// contraction down to a clique. Throws InternalError if a non-complete
// contraction step has no even pair.
Coloring color_weakly_chordal(const Graph& g);

// color(v) = length of the longest directed path ending at v. Requires o
// transitive and acyclic; uses exactly as many colors as the longest chain.
Coloring chain_color(const Graph& g, const Orientation& o);

// Produces a verified transitive acyclic orientation for a class-B member
// with an even hole >= 6, peeling sensitive vertices first. Shared by the
// driver and the CLI orient command.
Orientation orient_class_graph(const Graph& g, TraceNode* trace = nullptr);

// The recursive driver: homogeneous substitution, then the weakly chordal
// branch, then sensitive peeling / box orientation. Refuses graphs outside
// the class (bull-reducible, no odd hole, no antihole) with a certificate.
std::pair<Coloring, TraceNode> color_driver(const Graph& g);

// Minimum-weight coloring per the same recursion; comparability and weakly
// chordal leaves are solved by clique replication of the weights (capped).
WeightedColoring weighted_color(const Graph& g, const std::vector<int>& w,
                                int replication_cap = 200);

// "vertex color" per line.
std::string serialize_coloring(const Coloring& c, int n);
Coloring parse_coloring(const Graph& g, const std::string& text);

// "class-id weight: members" per line.
std::string serialize_weighted_coloring(const WeightedColoring& c);
WeightedColoring parse_weighted_coloring(const std::string& text);

}  // namespace bullberge
