#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "islide/graph.hpp"
#include "islide/independence.hpp"

namespace islide {

/// Token slide between nodes a < b: nodes[b] = nodes[a] - {from} + {to},
/// with `from` adjacent to `to` in the base graph.
struct SlideMove {
  int a = 0;
  int b = 0;
  int from = 0;
  int to = 0;
  bool operator==(const SlideMove&) const = default;
};

/// Reconfiguration graph over a family of equal-sized vertex sets.
struct SlideGraph {
  Graph base;
  std::vector<VertexSet> nodes;        // sorted by bitmask, distinct
  std::vector<SlideMove> edges;        // sorted by (a, b)
  std::vector<std::vector<int>> adjacency;

  int order() const { return static_cast<int>(nodes.size()); }
  std::size_t size() const { return edges.size(); }
  /// The reconfiguration graph as a Graph; throws Error(Capacity) past 64 nodes.
  Graph skeleton() const;
  std::vector<int> degree_sequence() const;  // non-increasing
  int index_of(VertexSet s) const;           // -1 when absent
};

/// Throws InvalidArgument on an empty family, mixed cardinalities or sets
/// that are not inside V(g).
SlideGraph build_slide_graph(const Graph& g, std::vector<VertexSet> family);

SlideGraph i_graph(const Graph& g, std::size_t cap = kDefaultSetCap);
SlideGraph alpha_graph(const Graph& g, std::size_t cap = kDefaultSetCap);

struct InvariantViolation {
  std::string rule;
  std::string detail;
};

/// Structural rules every slide graph satisfies:
///   distance-bound   d(X, Y) >= |X - Y| for connected X, Y
///   distance-two     d(X, Y) = 2 implies |X - Y| = 2
///   triangle-rule    X -(x,y1)-> Y -(y2,z)-> Z with X != Z: XZ is an edge iff y1 = y2
///   star-bound       an induced K_{1,m} in the graph has m <= set size
///   move-validity    each edge really is a slide along an edge of the base graph
std::vector<InvariantViolation> check_slide_invariants(const SlideGraph& sg);

/// Graphviz output; nodes are labelled "{v3,v7,...}", edges with their move.
std::string to_dot(const SlideGraph& sg, std::string_view name = "I");

/// All-pairs BFS distances between nodes; -1 when unreachable.
std::vector<std::vector<int>> node_distances(const SlideGraph& sg);

}  // namespace islide
