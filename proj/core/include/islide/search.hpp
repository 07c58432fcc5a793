#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "islide/generators.hpp"
#include "islide/graph.hpp"
#include "islide/seeds.hpp"

namespace islide {

inline constexpr int kMaxSearchOrder = 8;

/// Number of labeled graphs on n vertices, 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);

/// Labeled graph whose upper-triangle bit t is set for the t-th pair in
/// column order (0,1), (0,2), (1,2), (0,3), ...
Graph graph_from_mask(int n, std::uint64_t mask);
std::uint64_t mask_of(const Graph& g);

/// Calls `visit` for every labeled graph on n vertices (1 <= n <= 8) in mask
/// order, optionally only the connected ones. Throws InvalidArgument for n
/// out of range.
void enumerate_labeled_graphs(int n, bool connected_only, const std::function<void(const Graph&)>& visit);

struct SearchOptions {
  int max_n = 7;
  bool connected_only = false;
  bool all_witnesses = false;   // keep scanning every order up to max_n
  std::size_t witness_cap = 1000;
  bool use_filters = true;      // i-set count and degree filters before isomorphism
  int threads = 0;              // 0 = hardware concurrency
  std::function<void(const std::string&)> progress;  // one line per finished order
};

struct SearchReport {
  Graph target;
  int max_n = 0;
  bool connected_only = false;
  std::uint64_t graphs_examined = 0;
  std::vector<Graph> witnesses;        // increasing (order, mask)
  bool witnesses_truncated = false;
  double elapsed = 0.0;                // seconds
  std::string note;
};

/// Scans labeled graphs of increasing order for seeds whose i-graph is
/// isomorphic to the target. Without all_witnesses the scan stops after the
/// first order that has a witness, and reports the witness of smallest mask.
SearchReport find_seed(const Graph& target, const SearchOptions& opts = {});

/// Same scan, expected to find nothing. The report states the bound; an
/// empty result corroborates non-realizability up to max_n, it proves nothing.
SearchReport confirm_non_realizable(const Graph& target, const SearchOptions& opts = {});

/// One shared scan for several targets; each report is what find_seed with
/// all_witnesses would give on its own, except that examined counts cover
/// the whole scan.
std::vector<SearchReport> search_many(const std::vector<Graph>& targets, const SearchOptions& opts);

struct TableEntry {
  ThetaSpec spec;
  Verdict verdict = Verdict::InvalidSpec;
  std::string construction;   // id, or exception name
  bool passed = false;
  std::string detail;
};

struct TableReport {
  int max_total = 0;
  int search_max_n = 0;
  std::vector<TableEntry> entries;
  bool passed = false;
};

/// Verifies every valid theta spec with at most max_total vertices: realizable
/// specs through verify_theta_seed, exceptions by their verdict plus (when
/// search_max_n > 0) a bounded search that must find no seed.
TableReport verify_table(int max_total, int search_max_n = 7, const SearchOptions& search_opts = {});

}  // namespace islide
