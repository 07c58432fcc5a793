#include <gtest/gtest.h>

#include <set>

#include "islide/error.hpp"
#include "islide/generators.hpp"
#include "islide/graph_ops.hpp"
#include "islide/independence.hpp"
#include "islide/isomorphism.hpp"
#include "islide/planar.hpp"
#include "islide/reconfig.hpp"
#include "islide/search.hpp"
#include "islide/seeds.hpp"
#include "support/oracles.hpp"

using namespace islide;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::InvalidArgument;
}

// Removes one named vertex from a complement seed.
Graph without(const Graph& gbar, int v) { return gbar.induced(gbar.vertices() - VertexSet::single(v)); }

}  // namespace

TEST(ThetaSeed, Exceptions) {
  const std::vector<std::pair<ThetaSpec, std::string>> cases = {
      {{1, 2, 2}, "diamond"}, {{2, 2, 2}, "K_{2,3}"}, {{2, 2, 3}, "kappa"}, {{2, 2, 4}, "theta(2,2,4)"},
      {{2, 3, 3}, "theta(2,3,3)"}, {{2, 3, 4}, "theta(2,3,4)"}, {{3, 3, 3}, "theta(3,3,3)"}};
  for (const auto& [spec, name] : cases) {
    auto res = build_theta_seed_complement(spec);
    EXPECT_EQ(res.verdict, Verdict::NotRealizable) << to_string(spec);
    EXPECT_NE(res.message.find(name), std::string::npos) << res.message;
    EXPECT_FALSE(res.gbar.has_value());
    EXPECT_THROW(verify_theta_seed(spec), Error);
  }
  EXPECT_EQ(exception_name({2, 2, 3}), "kappa = theta(2,2,3)");
  EXPECT_EQ(exception_name({2, 2, 5}), "");
}

TEST(ThetaSeed, InvalidSpecs) {
  EXPECT_EQ(build_theta_seed_complement({1, 1, 4}).verdict, Verdict::InvalidSpec);
  EXPECT_EQ(build_theta_seed_complement({3, 2, 4}).verdict, Verdict::InvalidSpec);
  EXPECT_EQ(build_theta_seed_complement({0, 2, 4}).verdict, Verdict::InvalidSpec);
}

TEST(ThetaSeed, Fig4Seed) {
  auto res = build_theta_seed_complement({1, 4, 5});
  ASSERT_EQ(res.verdict, Verdict::Realizable);
  EXPECT_EQ(res.trace->id, ConstructionId::C_1kl);
  EXPECT_EQ(triangle_isets_of_complement(*res.gbar).size(), 9u);
  EXPECT_EQ(i_graph(complement(*res.gbar)).order(), 9);
}

TEST(ThetaSeed, Theta227Shape) {
  auto res = build_theta_seed_complement({2, 2, 7});
  ASSERT_EQ(res.verdict, Verdict::Realizable);
  const auto& t = *res.trace;
  EXPECT_EQ(t.id, ConstructionId::C_22l_a);
  for (const char* name : {"w0", "w1", "w2", "w3", "w4", "v1", "v2", "v3", "v4", "z"}) {
    EXPECT_GE(t.vertex(name), 0) << name;
  }
  EXPECT_EQ(res.gbar->order(), 10);
  Graph wheel = res.gbar->induced(VertexSet::of({t.vertex("w0"), t.vertex("w1"), t.vertex("w2"), t.vertex("w3"),
                                                  t.vertex("w4")}));
  EXPECT_TRUE(is_isomorphic(wheel, wheel_graph(4)));
  Graph path = res.gbar->induced(VertexSet::of({t.vertex("v1"), t.vertex("v2"), t.vertex("v3"), t.vertex("v4")}));
  EXPECT_TRUE(path.is_connected());
  EXPECT_EQ(res.gbar->degree(t.vertex("z")), 3);
  EXPECT_EQ(i_graph(complement(*res.gbar)).order(), 10);
}

TEST(ThetaSeed, VerifyExamples) {
  auto r225 = verify_theta_seed({2, 2, 5});
  ASSERT_EQ(r225.size(), 1u);
  EXPECT_TRUE(r225[0].passed);
  EXPECT_EQ(r225[0].i_set_count, 8);

  auto r334 = verify_theta_seed({3, 3, 4});
  EXPECT_TRUE(r334[0].passed);
  EXPECT_EQ(r334[0].i_set_count, 9);

  auto r235 = verify_theta_seed({2, 3, 5});
  EXPECT_TRUE(r235[0].passed);
  EXPECT_EQ(r235[0].alpha, 4);
  EXPECT_EQ(r235[0].alpha_set_count, 1);

  auto r244 = verify_theta_seed({2, 4, 4});
  EXPECT_EQ(r244[0].id, ConstructionId::C_244);
  EXPECT_TRUE(r244[0].passed);

  auto r555 = verify_theta_seed({5, 5, 5});
  EXPECT_EQ(r555[0].id, ConstructionId::C_jk5);
  EXPECT_TRUE(r555[0].passed);
}

TEST(ThetaSeed, FullSweepCrossChecksEveryArm) {
  int checks = 0;
  for (const auto& spec : theta_specs_up_to(26)) {
    if (!exception_name(spec).empty()) continue;
    for (const auto& r : verify_theta_seed(spec, {.cross_check = true})) {
      ++checks;
      const auto* f = r.failure();
      EXPECT_TRUE(r.passed) << to_string(spec) << " " << to_string(r.id) << ": "
                            << (f ? f->name + " " + f->detail : "");
    }
  }
  EXPECT_GT(checks, 500);
}

TEST(ThetaSeed, TracesAreConsistent) {
  for (const auto& spec : theta_specs_up_to(16)) {
    if (!exception_name(spec).empty()) continue;
    for (auto id : applicable_constructions(spec)) {
      auto [gbar, trace] = build_construction(id, spec);
      if (id == ConstructionId::LINE_ROOT) continue;
      ASSERT_EQ(trace.names.size(), static_cast<std::size_t>(gbar.order()));
      std::set<std::string> distinct(trace.names.begin(), trace.names.end());
      EXPECT_EQ(distinct.size(), trace.names.size());
      EXPECT_EQ(trace.expected_order, spec.vertex_count());
      for (const auto& [name, s] : trace.expected_labels) {
        EXPECT_EQ(s.size(), 3) << name;
        EXPECT_TRUE(gbar.is_clique(s)) << to_string(spec) << " " << name;
      }
      // Byte-stable output.
      EXPECT_EQ(build_construction(id, spec).first, gbar);
    }
  }
}

TEST(ThetaSeed, AlphaGraphRelations) {
  for (const auto& spec : theta_specs_up_to(18)) {
    if (!exception_name(spec).empty()) continue;
    for (auto id : applicable_constructions(spec)) {
      auto [gbar, trace] = build_construction(id, spec);
      Graph g = complement(gbar);
      Graph target = theta(spec);
      if (trace.alpha_equal) {
        EXPECT_TRUE(is_isomorphic(alpha_graph(g).skeleton(), target)) << to_string(spec) << " " << to_string(id);
      }
      if (id == ConstructionId::C_22l_a || id == ConstructionId::C_22l_b) {
        EXPECT_FALSE(is_isomorphic(alpha_graph(g).skeleton(), i_graph(g).skeleton())) << to_string(spec);
      }
    }
  }
}

TEST(ThetaSeed, GeneralArmAlsoWorks) {
  for (const auto& spec : std::vector<ThetaSpec>{{2, 4, 5}, {3, 3, 5}, {4, 4, 4}, {3, 4, 4}, {4, 5, 5}}) {
    auto reports = verify_theta_seed(spec, {.force_general = true});
    ASSERT_EQ(reports.size(), 1u);
    EXPECT_TRUE(reports[0].passed) << to_string(spec);
  }
}

TEST(ThetaSeed, OneTwoLUsesLineGraphRoute) {
  auto res = build_theta_seed_complement({1, 2, 6});
  ASSERT_EQ(res.verdict, Verdict::Realizable);
  EXPECT_EQ(res.trace->id, ConstructionId::LINE_ROOT);
  auto reports = verify_theta_seed({1, 2, 6});
  EXPECT_TRUE(reports[0].passed);
  EXPECT_EQ(reports[0].i, 2);
}

TEST(LineGraphRoot, Examples) {
  EXPECT_TRUE(is_isomorphic(line_graph_root(diamond_graph()), paw_graph()));
  EXPECT_TRUE(is_isomorphic(line_graph_root(complete_graph(3)), star_graph(3)));
  EXPECT_EQ(kind_of([] { line_graph_root(star_graph(3)); }), ErrorKind::NotALineGraph);
  EXPECT_EQ(kind_of([] { line_graph_root(disjoint_union(path_graph(2), path_graph(2))); }),
            ErrorKind::NotConnected);
}

TEST(LineGraphRoot, RecoversRandomRoots) {
  for (int n = 3; n <= 6; ++n) {
    enumerate_labeled_graphs(n, true, [&](const Graph& f) {
      Graph l = line_graph(f);
      Graph root = line_graph_root(l);
      ASSERT_TRUE(is_isomorphic(line_graph(root), l));
    });
  }
}

TEST(LineGraphRoot, RejectsNonLineGraphs) {
  // Three of the nine forbidden subgraphs.
  Graph w5 = wheel_graph(5);
  EXPECT_EQ(kind_of([&] { line_graph_root(w5); }), ErrorKind::NotALineGraph);
  Graph k5e = complete_graph(5);
  k5e.remove_edge(0, 1);
  EXPECT_EQ(kind_of([&] { line_graph_root(k5e); }), ErrorKind::NotALineGraph);
}

TEST(SeedFromLineGraph, Examples) {
  Graph c6 = cycle_graph(6);
  Graph seed = seed_from_line_graph(c6);
  EXPECT_TRUE(is_isomorphic(seed, complement(c6)));
  EXPECT_TRUE(is_isomorphic(i_graph(seed).skeleton(), c6));

  Graph t124 = theta({1, 2, 4});
  EXPECT_TRUE(is_isomorphic(i_graph(seed_from_line_graph(t124)).skeleton(), t124));

  EXPECT_EQ(kind_of([] { seed_from_line_graph(diamond_graph()); }), ErrorKind::ContainsDiamond);
  EXPECT_EQ(seed_from_line_graph(complete_graph(4)), complete_graph(4));
}

TEST(SeedFromLineGraph, SeedsAreWellCoveredWithTwo) {
  for (int n = 3; n <= 6; ++n) {
    enumerate_labeled_graphs(n, true, [&](const Graph& f) {
      if (has_triangle(f)) return;
      Graph h = line_graph(f);
      if (h.size() == h.order() * (h.order() - 1) / 2) return;
      auto rep = independence_report(seed_from_line_graph(h));
      EXPECT_EQ(rep.i, 2);
      EXPECT_EQ(rep.alpha, 2);
    });
  }
}

TEST(Deletion, MatchesConstructionApexes) {
  {
    auto [gbar, t] = build_construction(ConstructionId::C_22l_b, {2, 2, 5});
    Graph base = without(gbar, t.vertex("z2"));
    // Removing z2 (the last vertex) keeps every other index.
    ASSERT_EQ(t.vertex("z2"), gbar.order() - 1);
    Graph rebuilt = apply_deletion(base, VertexSet::of({t.vertex("w2"), t.vertex("w3"), t.vertex("v2")}));
    EXPECT_EQ(rebuilt, gbar);
  }
  {
    auto [gbar, t] = build_construction(ConstructionId::C_244, {2, 4, 4});
    ASSERT_EQ(t.vertex("z'"), gbar.order() - 1);
    Graph base = without(gbar, t.vertex("z'"));
    Graph rebuilt = apply_deletion(base, VertexSet::of({t.vertex("w0"), t.vertex("w1"), t.vertex("w4")}));
    EXPECT_EQ(rebuilt, gbar);
  }
}

TEST(Deletion, Fig4LosesX) {
  auto [gbar, t] = build_construction(ConstructionId::C_1kl, {1, 4, 5});
  const VertexSet x = t.label("X");
  auto before = independence_report(complement(gbar)).i_sets;
  Graph after_bar = apply_deletion(gbar, x);
  auto after = independence_report(complement(after_bar)).i_sets;
  std::vector<VertexSet> expected;
  for (auto s : before) {
    if (s != x) expected.push_back(s);
  }
  EXPECT_EQ(after, expected);
  Graph th = theta({1, 4, 5});
  Graph minus_pole = th.induced(th.vertices() - VertexSet::single(0));
  EXPECT_TRUE(is_isomorphic(i_graph(complement(after_bar)).skeleton(), minus_pole));
}

TEST(Deletion, Rejects) {
  Graph k4 = complete_graph(4);
  EXPECT_EQ(kind_of([&] { apply_deletion(k4, VertexSet::of({0, 1, 2})); }), ErrorKind::NotATriangle);
  EXPECT_EQ(kind_of([&] { apply_deletion(cycle_graph(5), VertexSet::of({0, 1, 2})); }), ErrorKind::NotATriangle);
}

TEST(PlanarSeed, Cube) {
  auto ps = planar_seed(cube_graph(), cube_rotation());
  Graph three_k2 = disjoint_union(disjoint_union(path_graph(2), path_graph(2)), path_graph(2));
  EXPECT_TRUE(is_isomorphic(ps.seed, three_k2));
  auto ig = i_graph(ps.seed);
  EXPECT_EQ(ig.order(), 8);
  EXPECT_TRUE(is_isomorphic(ig.skeleton(), cube_graph()));
  for (const auto& [name, s] : ps.trace.expected_labels) EXPECT_GE(ig.index_of(s), 0) << name;
}

TEST(PlanarSeed, HexagonalPrism) {
  auto ps = planar_seed(hexagonal_prism_graph(), hexagonal_prism_rotation());
  EXPECT_EQ(ps.seed.order(), 8);
  auto ig = i_graph(ps.seed);
  EXPECT_TRUE(contains_induced(ig.skeleton(), hexagonal_prism_graph()));
}

TEST(PlanarSeed, Errors) {
  EXPECT_EQ(kind_of([] { planar_seed(complete_graph(4), k4_rotation()); }), ErrorKind::NotBipartite);
  RotationSystem c4{{{1, 3}, {2, 0}, {3, 1}, {0, 2}}};
  EXPECT_EQ(kind_of([&] { planar_seed(cycle_graph(4), c4); }), ErrorKind::NotCubic);
}

TEST(HouseSeed, Trace) {
  auto t = house_seed_trace();
  auto rep = independence_report(house_seed());
  EXPECT_EQ(rep.i, t.expected_i);
  ASSERT_EQ(t.expected_labels.size(), 5u);
  for (const auto& [name, s] : t.expected_labels) {
    EXPECT_TRUE(std::binary_search(rep.i_sets.begin(), rep.i_sets.end(), s)) << name;
  }
}
