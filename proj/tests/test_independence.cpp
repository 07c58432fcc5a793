#include <gtest/gtest.h>

#include "islide/error.hpp"
#include "islide/generators.hpp"
#include "islide/graph_ops.hpp"
#include "islide/independence.hpp"
#include "islide/seeds.hpp"
#include "support/oracles.hpp"

using namespace islide;

TEST(MaximalIndependentSets, Examples) {
  auto star = maximal_independent_sets(star_graph(3));
  ASSERT_EQ(star.size(), 2u);
  EXPECT_EQ(star[0], VertexSet::single(0));
  EXPECT_EQ(star[1], VertexSet::of({1, 2, 3}));

  auto c5 = maximal_independent_sets(cycle_graph(5));
  EXPECT_EQ(c5.size(), 5u);
  for (auto s : c5) EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(c5, oracle::maximal_independent_sets(cycle_graph(5)));
}

TEST(MaximalIndependentSets, HouseSeed) {
  // a=0 b=1 c=2 d=3 e=4
  auto sets = maximal_independent_sets(house_seed());
  std::vector<VertexSet> expected = {VertexSet::of({0, 2}), VertexSet::of({0, 3}), VertexSet::of({0, 4}),
                                     VertexSet::of({1, 3}), VertexSet::of({1, 4})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(sets, expected);
}

TEST(MaximalIndependentSets, AgreesWithBruteForce) {
  std::mt19937_64 rng(oracle::test_seed());
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_graph(rng, n, 0.1 + 0.8 * static_cast<double>(t % 10) / 10);
    auto fast = maximal_independent_sets(g);
    EXPECT_EQ(fast, oracle::maximal_independent_sets(g));
    EXPECT_EQ(fast, oracle::maximal_cliques(complement(g)));
    for (auto s : fast) {
      EXPECT_TRUE(g.is_independent(s));
      EXPECT_TRUE(g.dominates(s));
    }
  }
}

TEST(MaximalIndependentSets, CapThrows) {
  // 10 disjoint edges: 2^10 maximal independent sets.
  Graph g(20);
  for (int v = 0; v < 20; v += 2) g.add_edge(v, v + 1);
  try {
    maximal_independent_sets(g, 100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SetCountCap);
  }
  EXPECT_EQ(maximal_independent_sets(g, 1024).size(), 1024u);
}

TEST(IndependenceReport, Examples) {
  for (int n = 1; n <= 6; ++n) {
    auto r = independence_report(complete_graph(n));
    EXPECT_EQ(r.i, 1);
    EXPECT_EQ(r.alpha, 1);
    EXPECT_EQ(r.i_sets.size(), static_cast<std::size_t>(n));
  }
  auto w = independence_report(complement(wheel_graph(4)));
  EXPECT_EQ(w.i, 3);
  EXPECT_EQ(w.alpha, 3);
  EXPECT_EQ(w.i_sets.size(), 4u);
  for (auto s : w.i_sets) EXPECT_TRUE(s.contains(4));
}

TEST(IndependenceReport, Seed235HasAlphaFour) {
  auto res = build_theta_seed_complement({2, 3, 5});
  ASSERT_EQ(res.verdict, Verdict::Realizable);
  EXPECT_EQ(res.trace->id, ConstructionId::C_23l_b);
  auto r = independence_report(complement(*res.gbar));
  EXPECT_EQ(r.i, 3);
  EXPECT_EQ(r.alpha, 4);
}

TEST(IndependenceReport, RandomAgainstBruteForce) {
  std::mt19937_64 rng(oracle::test_seed() + 1);
  for (int t = 0; t < 300; ++t) {
    int n = 1 + static_cast<int>(rng() % 12);
    Graph g = oracle::random_graph(rng, n, 0.5);
    auto r = independence_report(g);
    EXPECT_EQ(r.i, oracle::independent_domination_number(g));
    EXPECT_EQ(r.alpha, oracle::independence_number(g));
    EXPECT_LE(r.i, r.alpha);
    EXPECT_EQ(r.well_covered(), r.i == r.alpha);
    EXPECT_EQ(r.total_mis_count, oracle::maximal_independent_sets(g).size());
    EXPECT_EQ(minimum_maximal_independent_sets(g), r.i_sets);
    auto summary = i_set_summary(g);
    EXPECT_EQ(summary.i, r.i);
    EXPECT_EQ(summary.count, r.i_sets.size());
    for (auto s : r.i_sets) EXPECT_EQ(s.size(), r.i);
    for (auto s : r.alpha_sets) EXPECT_EQ(s.size(), r.alpha);
    EXPECT_TRUE(std::is_sorted(r.i_sets.begin(), r.i_sets.end()));
    EXPECT_TRUE(std::adjacent_find(r.i_sets.begin(), r.i_sets.end()) == r.i_sets.end());
  }
}

namespace {

bool has_bridge(const Graph& g) {
  int comps = 0;
  auto count = [](const Graph& h) {
    int c = 0;
    VertexSet seen;
    for (int v = 0; v < h.order(); ++v) {
      if (seen.contains(v)) continue;
      ++c;
      VertexSet frontier = VertexSet::single(v);
      while (!frontier.empty()) {
        seen |= frontier;
        VertexSet next;
        for (int u : frontier) next |= h.neighbors(u);
        frontier = next - seen;
      }
    }
    return c;
  };
  comps = count(g);
  for (auto [u, v] : g.edges()) {
    Graph h = g;
    h.remove_edge(u, v);
    if (count(h) > comps) return true;
  }
  return false;
}

bool has_edge_on_no_triangle(const Graph& g) {
  for (auto [u, v] : g.edges()) {
    if ((g.neighbors(u) & g.neighbors(v)).empty()) return true;
  }
  return false;
}

}  // namespace

TEST(IndependenceProperties, BridgeInComplementGivesSmallI) {
  std::mt19937_64 rng(oracle::test_seed() + 2);
  int hits = 0;
  for (int t = 0; t < 400; ++t) {
    Graph gbar = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 11), 0.3);
    if (!has_bridge(gbar)) continue;
    ++hits;
    EXPECT_LE(independence_report(complement(gbar)).i, 2);
  }
  EXPECT_GT(hits, 50);
}

// i(G) = 2 exactly when the complement has an edge on no triangle, among
// graphs without a dominating vertex.
TEST(IndependenceProperties, IEqualsTwoCharacterization) {
  std::mt19937_64 rng(oracle::test_seed() + 3);
  for (int t = 0; t < 600; ++t) {
    Graph g = oracle::random_graph(rng, 2 + static_cast<int>(rng() % 11), 0.3 + 0.4 * (t % 3) / 2.0);
    const int i = independence_report(g).i;
    if (i < 2) continue;
    EXPECT_EQ(i == 2, has_edge_on_no_triangle(complement(g))) << "trial " << t;
  }
}

TEST(IndependenceProperties, ISetCountBoundWhenITwo) {
  std::mt19937_64 rng(oracle::test_seed() + 4);
  int hits = 0;
  for (int t = 0; t < 600; ++t) {
    const int n = 2 + static_cast<int>(rng() % 11);
    Graph g = oracle::random_graph(rng, n, 0.5);
    auto s = i_set_summary(g);
    if (s.i != 2) continue;
    ++hits;
    EXPECT_LE(2 * s.count, static_cast<std::size_t>(n * (n - 1) - 2 * g.size()));
  }
  EXPECT_GT(hits, 50);
}

TEST(TriangleISets, Examples) {
  auto w = triangle_isets_of_complement(wheel_graph(4));
  ASSERT_EQ(w.size(), 4u);
  for (auto t : w) EXPECT_TRUE(t.contains(4));
  EXPECT_TRUE(triangle_isets_of_complement(complete_graph(4)).empty());

  auto [gbar, trace] = build_construction(ConstructionId::C_22l_b, {2, 2, 5});
  auto tris = triangle_isets_of_complement(gbar);
  EXPECT_EQ(tris.size(), 8u);
  for (const char* name : {"X", "Y", "A", "B", "D1", "D2", "D3", "D4"}) {
    EXPECT_TRUE(std::binary_search(tris.begin(), tris.end(), trace.label(name))) << name;
  }
  EXPECT_EQ(tris, independence_report(complement(gbar)).i_sets);
}
