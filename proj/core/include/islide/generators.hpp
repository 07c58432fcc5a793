#pragma once

#include <string>
#include <string_view>

#include "islide/graph.hpp"

namespace islide {

/// Path lengths of a theta graph, j <= k <= l.
struct ThetaSpec {
  int j = 0;
  int k = 0;
  int l = 0;

  /// Empty when valid, otherwise the reason the triple is rejected.
  std::string invalid_reason() const;
  bool valid() const { return invalid_reason().empty(); }
  /// j + k + l - 1.
  int vertex_count() const { return j + k + l - 1; }

  auto operator<=>(const ThetaSpec&) const = default;
};

std::string to_string(const ThetaSpec& spec);

enum class NamedGraph {
  Path,       // P_n
  Cycle,      // C_n, n >= 3
  Complete,   // K_n
  Star,       // K_{1,n}, centre 0
  Wheel,      // C_n v K_1, n >= 3 rim vertices, hub last
  Fan,        // P_n v K_1, n >= 1 path vertices, hub last
  Diamond,    // K_4 - e
  Kappa,      // K_{2,3} with one edge subdivided
  House,
  Paw,
  ObstructionT,
};

/// Parses "path", "cycle", ..., "obstruction_T"; throws Error(InvalidArgument).
NamedGraph parse_named_graph(std::string_view name);

/// Builds a standard graph. `size` is ignored by the fixed-order kinds.
Graph make_named_graph(NamedGraph kind, int size = 0);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph wheel_graph(int rim);
Graph fan_graph(int path_len);
Graph diamond_graph();
Graph kappa_graph();
Graph house_graph();
Graph paw_graph();
/// The nine-vertex non-theta obstruction. Vertex order:
/// X, Y, A1, A2, B1, B2, D1, D2, D3.
Graph obstruction_t_graph();
Graph complete_bipartite_graph(int a, int b);
Graph cube_graph();               // Q_3, vertex = 3-bit word
Graph hexagonal_prism_graph();    // C_6 x K_2, outer ring 0..5, inner 6..11

/// Theta graph with poles 0 and 1, followed by the internal vertices of the
/// j-, k- and l-paths in order from pole 0 to pole 1.
/// Throws Error(InvalidArgument) on an invalid spec, Error(Capacity) beyond 64.
Graph theta(const ThetaSpec& spec);

}  // namespace islide
