#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "islide/graph.hpp"

namespace islide {

Graph complement(const Graph& g);

/// One vertex per edge of `g`, in lexicographic edge order; two vertices are
/// adjacent when their edges share an endpoint.
/// Throws Error(InvalidArgument) on an edgeless graph, Error(Capacity) past 64 edges.
Graph line_graph(const Graph& g);

/// True iff some vertex subset of `g` induces a copy of `h`.
bool contains_induced(const Graph& g, const Graph& h);
/// Vertex images of one induced embedding of `h` into `g`, if any.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& h);

bool is_diamond_free(const Graph& g);
bool is_claw_free(const Graph& g);
bool has_triangle(const Graph& g);
bool is_bipartite(const Graph& g);

/// All-pairs BFS distances; -1 marks unreachable pairs.
std::vector<std::vector<int>> distance_matrix(const Graph& g);

}  // namespace islide
