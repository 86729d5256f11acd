#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bullberge/graph.hpp"
#include "bullberge/recognition.hpp"

namespace bullberge {

// The leveled structure grown from a shortest even hole: saturated hole
// classes V_1..V_ell, the dominating sets A_1*/A_2*, the exceptional X_i
// (empty unless ell == 6), D_i = V_i + X_i, and the remainder Z split by
// which side of the hole it attaches to.
struct HoleSkeleton {
    int ell = 0;
    std::vector<VertexSet> v_sets;  // V_1..V_ell at indices 0..ell-1
    VertexSet a1_star, a2_star;
    std::vector<VertexSet> x_sets;
    VertexSet z, z1_star, z2_star;

    VertexSet v_star(int parity) const;  // parity 1 -> V_1*, 2 -> V_2*
    VertexSet d_set(int i) const { return v_sets[static_cast<std::size_t>(i)] | x_sets[static_cast<std::size_t>(i)]; }
    VertexSet d_star(int parity) const;
    VertexSet c_star(int parity) const;
};

struct Box {
    VertexSet members;
    bool odd_label = false;
    bool central = false;
    int level = 0;  // 1-based
    // Auxiliary vertices: a/b always set; c/d only for central boxes.
    int a = -1, b = -1, c = -1, d = -1;
};

struct BoxPartition {
    std::vector<Box> boxes;
    std::vector<int> box_of;  // vertex -> box index
    HoleSkeleton skeleton;
    std::vector<VertexSet> levels;

    int box_index(int v) const { return box_of[static_cast<std::size_t>(v)]; }
};

struct BoxViolation {
    std::string property;  // "(i)" .. "(vii)", "lemma4", claim ids
    std::vector<int> vertices;
    std::string detail;
};

struct BoxValidation {
    std::vector<BoxViolation> violations;
    bool ok() const { return violations.empty(); }
    std::string summary() const;
};

// Saturates V* to maximality (ascending vertex scan to a fixpoint), derives
// A*/X/D/Z by definition, and asserts the structural claims (1)-(5); a
// violation throws StructureError naming the claim.
HoleSkeleton build_hole_skeleton(const Graph& g, const Hole& c);

// BFS levels L_1 = C_1*, L_2 = N(L_1), L_{j+1} = N(L_j) - L_j - L_{j-1}.
// Throws StructureError when some vertex is unreachable.
std::vector<VertexSet> build_levels(const Graph& g, const HoleSkeleton& sk);

// Full Theorem-3 construction. Preconditions: g in class B, even hole of
// length >= 6 present, no antihole, no sensitive vertex. All properties are
// re-validated before returning; failures throw StructureError with the
// violation report.
BoxPartition build_box_partition(const Graph& g);

// Independent re-verification of properties (i)-(vii) plus the Lemma 4
// consequence; returns every violation rather than stopping at the first.
BoxValidation validate_box_partition(const Graph& g, const BoxPartition& bp);

// Versioned textual serialization consumed by the orientation module's CLI
// and the verify command.
std::string serialize_box_partition(const BoxPartition& bp);
BoxPartition parse_box_partition(const Graph& g, const std::string& text);

}  // namespace bullberge
