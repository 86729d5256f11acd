#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bullberge/coloring.hpp"
#include "bullberge/graph.hpp"
#include "bullberge/recognition.hpp"

namespace bullberge {

struct HomogeneousCheck {
    bool homogeneous = false;
    int partial_witness = -1;  // an outside vertex partial on h, when not
};

// Proper subset, at least two vertices, every outside vertex impartial on it.
HomogeneousCheck is_homogeneous(const Graph& g, const VertexSet& h);

// The pairwise-disjoint maximal homogeneous sets (the root children of the
// substitution decomposition, filtered to size >= 2): connected components
// when g is disconnected, co-components when the complement is, and merged
// pair-closures otherwise. Throws InternalError if the computed sets overlap.
std::vector<VertexSet> maximal_homogeneous_sets(const Graph& g);

enum class FKind { F1, F2 };

// The labeled F graph on vertices 0..|W|-1 standing for u1..u|W|:
// F1 is the bull u1-u2u5u3-u4, F2 the lock.
Graph f_graph(FKind kind);

struct BlueRedCount {
    int blue = 0;  // triples of W inducing one edge, p on one endpoint only
    int red = 0;   // chordless 3-paths with p on one end pair
};

// Exact counts for a partial vertex whose W-neighborhood is nbrs.
BlueRedCount classify_partial_vertex(FKind kind, const VertexSet& nbrs);

// The constructive homogeneous set extracted from a spiked F_j occurrence:
// T / Z / P partition the rest, A collects T-vertices with Z-neighbors, X is
// the part of Z reachable from P through Z, Y the part of T - A reachable in
// the complement, and H = W + P + X + Y.
struct SpikedDecomposition {
    FKind kind;
    VertexSet w;
    int a = -1, b = -1;
    VertexSet t, z, p, p1, p2, a_set, x_set, y_set, h;
};

SpikedDecomposition homogeneous_from_spiked(const Graph& g, const StructureWitness& witness);

struct Substitution {
    Graph graph;
    VertexSet h;                  // the replaced set, in g's ids
    std::vector<int> kept_to_new; // g id -> new id, -1 inside h
    std::vector<int> clique;      // new ids of Q(H), in inner-class order
};

// (g - h) plus a k-clique carrying h's outside neighborhood.
Substitution substitute_clique(const Graph& g, const VertexSet& h, int k);

// outer colors the substituted graph, inner colors g[h] (through the id map
// of hs); class i of inner is matched to clique vertex i of the substitution.
Coloring merge_colorings(const Graph& g, const Coloring& outer, const Coloring& inner,
                         const Substitution& sub, const InducedSubgraph& hs);

}  // namespace bullberge
