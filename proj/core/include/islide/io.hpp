#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "islide/graph.hpp"

namespace islide {

/// Edge-list text: first line is the vertex count, then one "u v" pair per
/// line (0-indexed). Blank lines and lines starting with '#' are skipped.
Graph from_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// graph6 with the one-byte size form only (n <= 62).
Graph from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Reads a graph from either format: text that parses as a single graph6
/// token is graph6, anything else is an edge list.
Graph parse_graph_text(std::string_view text);

std::string read_file(const std::string& path);

/// Graphviz output. `labels`, when non-empty, must have one entry per vertex.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels = {},
                   std::string_view name = "G");

}  // namespace islide
