#pragma once

#include <cstddef>
#include <vector>

#include "islide/graph.hpp"

namespace islide {

inline constexpr std::size_t kDefaultSetCap = 1'000'000;

/// All maximal independent sets, sorted by bitmask.
/// Throws Error(SetCountCap) once more than `cap` sets are found.
std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap = kDefaultSetCap);

struct IndependenceReport {
  int i = 0;
  int alpha = 0;
  std::vector<VertexSet> i_sets;      // sorted by bitmask
  std::vector<VertexSet> alpha_sets;  // sorted by bitmask
  std::size_t total_mis_count = 0;

  bool well_covered() const { return i == alpha; }
};

IndependenceReport independence_report(const Graph& g, std::size_t cap = kDefaultSetCap);

/// Minimum maximal independent sets only; prunes branches that cannot reach
/// the current minimum, so it is much cheaper than a full enumeration.
std::vector<VertexSet> minimum_maximal_independent_sets(const Graph& g,
                                                        std::size_t cap = kDefaultSetCap);

struct ISetSummary {
  int i = 0;
  std::size_t count = 0;
};
/// i(G) and the number of i-sets without materializing them.
ISetSummary i_set_summary(const Graph& g);

/// Triangles of `gbar` that are maximal cliques, sorted by bitmask. When the
/// smallest maximal clique of gbar has three vertices these are exactly the
/// i-sets of the complement.
std::vector<VertexSet> triangle_isets_of_complement(const Graph& gbar);

}  // namespace islide
