#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bullberge/box_partition.hpp"
#include "bullberge/graph.hpp"
#include "bullberge/orientation.hpp"

namespace bullberge {

enum class GraphFormat { Dimacs, Json };

// DIMACS: "c" comments, one "p edge <n> <m>" line, then "e <u> <v>" lines
// (1-indexed in the file). Json: {"n": .., "edges": [[u,v], ..]} 0-indexed.
Graph parse_graph(const std::string& text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

std::optional<GraphFormat> guess_format(const std::string& filename, const std::string& text);

// Weight files: one "vertex weight" pair per line, 0-indexed; missing
// vertices default to weight 1.
std::vector<int> parse_weights(const Graph& g, const std::string& text);
std::string serialize_weights(const std::vector<int>& w);

// Graphviz output; boxes color the vertices, an orientation turns edges
// into arrows labeled by their rule.
std::string to_dot(const Graph& g, const Orientation* o = nullptr, const BoxPartition* bp = nullptr);

}  // namespace bullberge
