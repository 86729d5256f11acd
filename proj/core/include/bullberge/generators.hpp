#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bullberge/graph.hpp"
#include "bullberge/recognition.hpp"

namespace bullberge {

// Deterministic: the same spec and seed reproduce the instance bit for bit.
struct InstanceSpec {
    std::string name;
    std::vector<long long> args;
    std::uint64_t seed = 0;
};

// "name", "name:3", "name:6:2" plus a separate seed.
InstanceSpec parse_instance_spec(const std::string& text, std::uint64_t seed);

struct GeneratedInstance {
    Graph graph;
    std::string structure;  // what was planted
    std::map<std::string, std::string> meta;
};

// Fixed constructions.
Graph make_bull();
Graph make_lock();
Graph make_wheel(int hole_len);
Graph make_double_broom();
Graph make_spiked(StructureKind kind);  // SpikedF1 or SpikedF2

// Named generators:
//   hole:<len>              chordless cycle
//   path:<len>              chordless path
//   bull, lock, double-broom
//   wheel:<len>             even hole plus dominating hub
//   spiked:<1|2>            plain spiked F
//   spiked-deco:<1|2>       spiked F with randomized P/X/Y/T attachments,
//                           rejected until bull-reducible and C5-free
//   blowup:<len>            saturated even-hole instance with clique classes,
//                           A*-vertices, X-vertices and peripheral trees,
//                           rejected into class B with no sensitive vertex
//   sensitive:<len>         hole plus a sensitive vertex (and optional A/B/U2
//                           attachments), class-B with even hole
//   chordal:<n>             random interval graph, rejected to bull-reducible
//   class-random:<n>:<p%>   G(n,p); no class claim, callers filter
//   wrapped:<n>             class instance with one vertex substituted by a
//                           small module, rejected to the base class
// Throws StructureError when the rejection budget runs out.
GeneratedInstance generate(const InstanceSpec& spec);

// Deterministic weights in [1, max_w] keyed by the seed.
std::vector<int> random_weights(int n, int max_w, std::uint64_t seed);

}  // namespace bullberge
