#include "islide/independence.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "islide/error.hpp"

namespace islide {

namespace {

// Branches on the lowest undominated vertex u: some member of N[u] must join
// the set. Candidates tried earlier are forbidden in later siblings, so every
// maximal independent set is reached exactly once.
template <class Visit, class Bound>
struct MisEnumerator {
  const Graph& g;
  std::uint64_t all;
  Visit visit;
  Bound within;  // within(k): may a set of size k still be useful?

  void run(std::uint64_t set, int size, std::uint64_t covered, std::uint64_t forbidden) {
    if (covered == all) {
      visit(set, size);
      return;
    }
    if (!within(size + 1)) return;
    const int u = std::countr_zero(all & ~covered);
    std::uint64_t cand = (g.row(u) | (std::uint64_t{1} << u)) & ~covered & ~forbidden;
    while (cand != 0) {
      const int c = std::countr_zero(cand);
      cand &= cand - 1;
      const std::uint64_t bit = std::uint64_t{1} << c;
      run(set | bit, size + 1, covered | g.row(c) | bit, forbidden);
      forbidden |= bit;
    }
  }
};

template <class Visit, class Bound>
void enumerate(const Graph& g, Visit visit, Bound within) {
  MisEnumerator<Visit, Bound> e{g, g.vertices().bits(), std::move(visit), std::move(within)};
  e.run(0, 0, 0, 0);
}

void sort_sets(std::vector<VertexSet>& sets) { std::sort(sets.begin(), sets.end()); }

[[noreturn]] void cap_exceeded(std::size_t cap) {
  throw Error(ErrorKind::SetCountCap,
              "more than " + std::to_string(cap) + " independent sets; raise the cap");
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Graph& g, std::size_t cap) {
  std::vector<VertexSet> out;
  enumerate(
      g,
      [&](std::uint64_t set, int) {
        if (out.size() >= cap) cap_exceeded(cap);
        out.emplace_back(set);
      },
      [](int) { return true; });
  sort_sets(out);
  return out;
}

IndependenceReport independence_report(const Graph& g, std::size_t cap) {
  IndependenceReport r;
  r.i = std::numeric_limits<int>::max();
  enumerate(
      g,
      [&](std::uint64_t set, int size) {
        if (++r.total_mis_count > cap) cap_exceeded(cap);
        if (size < r.i) {
          r.i = size;
          r.i_sets.clear();
        }
        if (size == r.i) r.i_sets.emplace_back(set);
        if (size > r.alpha) {
          r.alpha = size;
          r.alpha_sets.clear();
        }
        if (size == r.alpha) r.alpha_sets.emplace_back(set);
      },
      [](int) { return true; });
  sort_sets(r.i_sets);
  sort_sets(r.alpha_sets);
  return r;
}

std::vector<VertexSet> minimum_maximal_independent_sets(const Graph& g, std::size_t cap) {
  int best = g.order() + 1;
  std::vector<VertexSet> out;
  enumerate(
      g,
      [&](std::uint64_t set, int size) {
        if (size < best) {
          best = size;
          out.clear();
        }
        if (out.size() >= cap) cap_exceeded(cap);
        out.emplace_back(set);
      },
      [&](int k) { return k <= best; });
  sort_sets(out);
  return out;
}

ISetSummary i_set_summary(const Graph& g) {
  ISetSummary s{g.order() + 1, 0};
  enumerate(
      g,
      [&](std::uint64_t, int size) {
        if (size < s.i) {
          s.i = size;
          s.count = 0;
        }
        ++s.count;
      },
      [&](int k) { return k <= s.i; });
  return s;
}

std::vector<VertexSet> triangle_isets_of_complement(const Graph& gbar) {
  std::vector<VertexSet> out;
  for (int a = 0; a < gbar.order(); ++a) {
    for (int b : gbar.neighbors(a)) {
      if (b <= a) continue;
      for (int c : gbar.neighbors(a) & gbar.neighbors(b)) {
        if (c <= b) continue;
        auto common = gbar.neighbors(a) & gbar.neighbors(b) & gbar.neighbors(c);
        if (common.empty()) out.push_back(VertexSet::of({a, b, c}));
      }
    }
  }
  sort_sets(out);
  return out;
}

}  // namespace islide
