#include <gtest/gtest.h>

#include <algorithm>

#include "islide/error.hpp"
#include "islide/generators.hpp"
#include "islide/graph_ops.hpp"
#include "islide/isomorphism.hpp"
#include "islide/reconfig.hpp"
#include "islide/search.hpp"
#include "islide/seeds.hpp"

using namespace islide;

TEST(Enumerate, Counts) {
  std::uint64_t all = 0;
  enumerate_labeled_graphs(2, false, [&](const Graph&) { ++all; });
  EXPECT_EQ(all, 2u);
  std::uint64_t total = 0;
  std::uint64_t connected = 0;
  enumerate_labeled_graphs(4, false, [&](const Graph&) { ++total; });
  enumerate_labeled_graphs(4, true, [&](const Graph& g) {
    EXPECT_TRUE(g.is_connected());
    ++connected;
  });
  EXPECT_EQ(total, 64u);
  EXPECT_EQ(connected, 38u);
  EXPECT_EQ(labeled_graph_count(7), 2097152u);
  EXPECT_THROW(enumerate_labeled_graphs(9, false, [](const Graph&) {}), Error);
}

TEST(Enumerate, MaskRoundTrip) {
  for (std::uint64_t m = 0; m < 64; ++m) EXPECT_EQ(mask_of(graph_from_mask(4, m)), m);
  // Column order: bit 0 = (0,1), bit 1 = (0,2), bit 2 = (1,2).
  EXPECT_EQ(graph_from_mask(3, 0b100), Graph(3, {{1, 2}}));
}

TEST(FindSeed, Examples) {
  SearchOptions o;
  o.max_n = 5;
  auto k1 = find_seed(Graph(1), o);
  ASSERT_EQ(k1.witnesses.size(), 1u);
  EXPECT_EQ(k1.witnesses[0].order(), 1);

  // The first order with a seed for C_4 is 4 (2K_2); complement(W_5) turns up at 5.
  auto c4 = find_seed(cycle_graph(4), o);
  ASSERT_FALSE(c4.witnesses.empty());
  EXPECT_TRUE(is_isomorphic(c4.witnesses[0], disjoint_union(path_graph(2), path_graph(2))));
  SearchOptions all = o;
  all.all_witnesses = true;
  auto c4_all = find_seed(cycle_graph(4), all);
  EXPECT_TRUE(std::any_of(c4_all.witnesses.begin(), c4_all.witnesses.end(),
                          [](const Graph& w) { return is_isomorphic(w, complement(wheel_graph(4))); }));

  auto house = find_seed(theta({1, 2, 3}), o);
  ASSERT_FALSE(house.witnesses.empty());
  EXPECT_TRUE(is_isomorphic(house.witnesses[0], house_seed()));
  for (const auto& w : house.witnesses) EXPECT_TRUE(is_isomorphic(i_graph(w).skeleton(), theta({1, 2, 3})));
}

TEST(ConfirmNonRealizable, Examples) {
  SearchOptions o;
  o.max_n = 6;
  auto d = confirm_non_realizable(diamond_graph(), o);
  EXPECT_TRUE(d.witnesses.empty());
  EXPECT_NE(d.note.find("not a proof"), std::string::npos);

  o.max_n = 3;
  auto k3 = confirm_non_realizable(complete_graph(3), o);
  ASSERT_FALSE(k3.witnesses.empty());
  EXPECT_EQ(k3.witnesses[0], complete_graph(3));
}

TEST(Search, UnfilteredCountAndFilterSoundness) {
  for (const Graph& target : {cycle_graph(4), path_graph(3), complete_graph(2), diamond_graph()}) {
    SearchOptions a;
    a.max_n = 5;
    a.all_witnesses = true;
    SearchOptions b = a;
    b.use_filters = false;
    auto fa = find_seed(target, a);
    auto fb = find_seed(target, b);
    EXPECT_EQ(fa.witnesses, fb.witnesses);
    EXPECT_EQ(fb.graphs_examined, 1u + 2u + 8u + 64u + 1024u);
  }
}

TEST(Search, DeterministicAcrossThreadCounts) {
  SearchOptions o;
  o.max_n = 6;
  o.all_witnesses = true;
  o.threads = 1;
  auto one = find_seed(path_graph(3), o);
  o.threads = 4;
  auto four = find_seed(path_graph(3), o);
  EXPECT_EQ(one.witnesses, four.witnesses);
  EXPECT_EQ(one.graphs_examined, four.graphs_examined);
}

TEST(Search, ManyMatchesSingle) {
  SearchOptions o;
  o.max_n = 5;
  o.all_witnesses = true;
  std::vector<Graph> targets = {cycle_graph(4), path_graph(3), diamond_graph()};
  auto many = search_many(targets, o);
  ASSERT_EQ(many.size(), 3u);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    EXPECT_EQ(many[t].witnesses, find_seed(targets[t], o).witnesses);
  }
}

TEST(Search, ConnectedOnly) {
  SearchOptions o;
  o.max_n = 5;
  o.connected_only = true;
  auto r = find_seed(cycle_graph(4), o);
  for (const auto& w : r.witnesses) EXPECT_TRUE(w.is_connected());
}

TEST(Search, RejectsLargeBounds) {
  SearchOptions o;
  o.max_n = 9;
  EXPECT_THROW(find_seed(path_graph(2), o), Error);
}

TEST(VerifyTable, UpToTwelve) {
  SearchOptions o;
  auto table = verify_table(12, 6, o);
  EXPECT_TRUE(table.passed);
  int exceptions = 0;
  for (const auto& e : table.entries) {
    EXPECT_TRUE(e.passed) << to_string(e.spec) << ": " << e.detail;
    exceptions += e.verdict == Verdict::NotRealizable;
    if (e.spec == ThetaSpec{2, 4, 4}) EXPECT_EQ(e.construction, "C_244");
    if (e.spec == ThetaSpec{2, 3, 4}) EXPECT_EQ(e.verdict, Verdict::NotRealizable);
  }
  EXPECT_EQ(exceptions, 7);
}
