#pragma once

#include <optional>
#include <vector>

#include "islide/graph.hpp"

namespace islide {

struct CanonicalForm {
  Graph graph;
  /// labeling[v] is the canonical label of input vertex v.
  std::vector<int> labeling;
};

/// Canonical relabeling by colour refinement plus individualization, with
/// pruning by automorphisms discovered during the search. Two graphs are
/// isomorphic exactly when their canonical graphs compare equal.
CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// A map f with h.has_edge(f[u], f[v]) == g.has_edge(u, v), if one exists.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace islide
