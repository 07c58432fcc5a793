#pragma once

// Brute-force reference implementations. Slow and obvious on purpose.

#include <cstdint>
#include <random>
#include <vector>

#include "islide/graph.hpp"

namespace oracle {

using islide::Graph;
using islide::VertexSet;

/// Maximal independent sets by scanning all 2^n subsets, sorted by mask.
std::vector<VertexSet> maximal_independent_sets(const Graph& g);
/// Maximal cliques by scanning all 2^n subsets, sorted by mask.
std::vector<VertexSet> maximal_cliques(const Graph& g);
/// Smallest and largest maximal independent set sizes.
int independent_domination_number(const Graph& g);
int independence_number(const Graph& g);

/// Tries every permutation; n <= 9.
bool isomorphic(const Graph& g, const Graph& h);
/// Tries every k-subset of V(g) with every permutation; small h only.
bool contains_induced(const Graph& g, const Graph& h);

/// Slide graph over `family` by definition: symmetric difference {x, y}
/// with xy an edge of g.
Graph slide_skeleton(const Graph& g, const std::vector<VertexSet>& family);

/// Line graph by definition: edges of g ordered as g.edges().
Graph line_graph(const Graph& g);

Graph random_graph(std::mt19937_64& rng, int n, double p);
std::vector<int> random_permutation(std::mt19937_64& rng, int n);

/// Fixed seed for every randomized test; override with ISLIDE_TEST_SEED.
std::uint64_t test_seed();

}  // namespace oracle
