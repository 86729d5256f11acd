#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "bullberge/graph.hpp"

namespace bullberge {

// Induced bull r-yxz-s: triangle yxz with horns r on y and s on z.
// Present edges ry, yx, yz, xz, zs; all other pairs non-adjacent.
struct Bull {
    int r, y, x, z, s;

    VertexSet members() const { return VertexSet::of({r, y, x, z, s}); }
    std::array<int, 5> tuple() const { return {r, y, x, z, s}; }
};

// Chordless cycle of length >= 5, stored in cyclic order, canonicalized so the
// smallest vertex comes first and its smaller neighbor second.
struct Hole {
    std::vector<int> cycle;

    int length() const { return static_cast<int>(cycle.size()); }
    bool even() const { return length() % 2 == 0; }
    VertexSet members() const {
        VertexSet s;
        for (int v : cycle) s.add(v);
        return s;
    }
    void canonicalize();
};

// Is the sequence a valid hole of g (chordless cycle >= 5)?
bool is_valid_hole(const Graph& g, const Hole& h);

// All induced bulls, one per 5-vertex set, canonical representative (y < z),
// sorted. Exhaustive.
std::vector<Bull> enumerate_bulls(const Graph& g);

struct BullReducibility {
    bool reducible = true;
    int witness = -1;       // vertex lying in two bulls
    Bull first{}, second{}; // the two bulls through the witness
};
BullReducibility is_bull_reducible(const Graph& g);

// Shortest hole through the P3 a-b-c (a,b,c consecutive on the hole), found
// via a shortest a-c path in g minus (N(a) & N(c)) and (N(b) - {a,c}).
std::optional<Hole> hole_through_p3(const Graph& g, int a, int b, int c);

// Shortest hole of any parity, by scanning every P3. Exact: every hole
// contains a P3, and the scan returns the globally shortest one.
std::optional<Hole> find_hole(const Graph& g);

// Shortest even hole of length >= 6 found by the P3 scan (holes of length 5
// and odd holes are ignored). On odd-hole-free graphs this is the shortest
// even hole outright.
std::optional<Hole> find_shortest_even_hole(const Graph& g);

// Exhaustive DFS over chordless cycles, independent of the P3 scan. Returns
// some hole with length % 2 == parity (0 even, 1 odd) and min_len <= length
// <= max_len, or nothing. Used as the Berge check and as a cross-check oracle.
std::optional<Hole> find_hole_with_parity(const Graph& g, int parity, int min_len = 5,
                                          int max_len = kMaxVertices);

// Hole of the complement, reported in g's vertex ids.
std::optional<Hole> find_antihole(const Graph& g);

struct WeaklyChordalCheck {
    bool weakly_chordal = true;
    std::optional<Hole> witness;  // a hole of g or of its complement
    bool witness_in_complement = false;
};
WeaklyChordalCheck is_weakly_chordal(const Graph& g);

enum class StructureKind { Wheel, DoubleBroom, Lock, SpikedF1, SpikedF2 };
std::string to_string(StructureKind k);

// vertices layout per kind:
//   Wheel:       hole vertices in cyclic order, hub last
//   DoubleBroom: p1 p2 p3 p4 (the P4), a, a', b, b'
//   Lock:        u1..u6 (C4 u1u2u3u4, u5 dominating it, u6 on u1,u2)
//   SpikedF1:    u1..u5 (bull u1-u2u5u3-u4), a, b
//   SpikedF2:    u1..u6 (lock), a, b
struct StructureWitness {
    StructureKind kind;
    std::vector<int> vertices;
};

std::optional<StructureWitness> detect_structure(const Graph& g, StructureKind kind);
std::vector<StructureWitness> enumerate_locks(const Graph& g);

struct ClassCheck {
    BullReducibility bulls;
    std::optional<Hole> odd_hole;
    std::optional<Hole> antihole;
    // Only populated when the extra class-B checks were requested.
    std::optional<StructureWitness> wheel;
    std::optional<StructureWitness> double_broom;
    std::optional<StructureWitness> spiked_f1;
    std::optional<StructureWitness> spiked_f2;

    // bull-reducible Berge graph with no antihole of any length
    bool in_base_class() const { return bulls.reducible && !odd_hole && !antihole; }
    // additionally wheel-, double-broom- and spiked-F free
    bool in_class_b() const {
        return in_base_class() && !wheel && !double_broom && !spiked_f1 && !spiked_f2;
    }
    std::string first_violation() const;
};

// check_b_extras additionally runs the wheel / double broom / spiked tests.
ClassCheck check_class(const Graph& g, bool check_b_extras);

struct SensitiveWitness {
    int x = -1;
    std::array<int, 6> u{};  // u1..u6 inducing a P6 or C6; x sees u2,u3 only
    bool closes_c6 = false;
    Hole hole_without_x;     // certificate hole of g - x, in g's ids
};
std::optional<SensitiveWitness> find_sensitive_vertex(const Graph& g);

// Position classification of an off-hole vertex against a shortest even hole,
// with one extension: NoNeighbor covers the empty intersection that the
// level decomposition produces for far-away vertices.
struct HoleClassification {
    enum class Variant {
        FullWheel,
        AllOneParity,
        ConsecutiveRun,
        TwoAtDistance2,
        FourThreeConsecutive,
        NoNeighbor,
    };
    Variant variant;
    int run_length = 0;  // set for ConsecutiveRun (1, 2 or 3)
    bool is_extension() const { return variant == Variant::NoNeighbor; }
};
std::string to_string(HoleClassification::Variant v);

// Throws StructureError when the neighborhood matches no variant; that
// refutes the caller's precondition that g is in the class.
HoleClassification classify_vertex_vs_hole(const Graph& g, const Hole& c, int v);

}  // namespace bullberge
