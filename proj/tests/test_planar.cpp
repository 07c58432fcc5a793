#include <gtest/gtest.h>

#include "islide/error.hpp"
#include "islide/generators.hpp"
#include "islide/graph_ops.hpp"
#include "islide/io.hpp"
#include "islide/isomorphism.hpp"
#include "islide/planar.hpp"

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

}  // namespace

TEST(PlanarDual, K4IsSelfDual) {
  auto d = planar_dual_embedding(complete_graph(4), k4_rotation());
  EXPECT_EQ(d.faces.size(), 4u);
  EXPECT_TRUE(is_isomorphic(d.dual, complete_graph(4)));
}

TEST(PlanarDual, CubeGivesOctahedron) {
  auto d = planar_dual_embedding(cube_graph(), cube_rotation());
  ASSERT_EQ(d.faces.size(), 6u);
  for (const auto& f : d.faces) EXPECT_EQ(f.size(), 4u);
  EXPECT_TRUE(is_isomorphic(d.dual, complement(disjoint_union(disjoint_union(path_graph(2), path_graph(2)),
                                                              path_graph(2)))));
}

TEST(PlanarDual, DoubleDualReturnsInput) {
  for (auto [g, rot] : std::vector<std::pair<Graph, RotationSystem>>{
           {complete_graph(4), k4_rotation()},
           {cube_graph(), cube_rotation()},
           {hexagonal_prism_graph(), hexagonal_prism_rotation()}}) {
    auto d = planar_dual_embedding(g, rot);
    auto dd = planar_dual_embedding(d.dual, d.rotation);
    EXPECT_TRUE(is_isomorphic(dd.dual, g));
  }
}

TEST(PlanarDual, Errors) {
  RotationSystem c4{{{1, 3}, {2, 0}, {3, 1}, {0, 2}}};
  EXPECT_EQ(kind_of([&] { planar_dual(cycle_graph(4), c4); }), ErrorKind::NonSimpleDual);

  // K4 with two rotations swapped traces too few faces for the sphere.
  RotationSystem twisted{{{1, 2, 3}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}};
  EXPECT_EQ(kind_of([&] { planar_dual(complete_graph(4), twisted); }), ErrorKind::NotPlanar);

  RotationSystem wrong{{{1, 2}, {2, 3, 0}, {0, 3, 1}, {0, 1, 2}}};
  EXPECT_EQ(kind_of([&] { planar_dual(complete_graph(4), wrong); }), ErrorKind::InvalidRotation);

  Graph two_k4 = disjoint_union(complete_graph(4), complete_graph(4));
  RotationSystem both = k4_rotation();
  for (const auto& r : k4_rotation().order) {
    std::vector<int> shifted;
    for (int v : r) shifted.push_back(v + 4);
    both.order.push_back(shifted);
  }
  EXPECT_EQ(kind_of([&] { planar_dual(two_k4, both); }), ErrorKind::NotConnected);
}

TEST(RotationFile, RoundTrip) {
  const auto text = format_rotation(cube_rotation());
  const auto back = parse_rotation(text, cube_graph());
  EXPECT_EQ(back.order, cube_rotation().order);
  EXPECT_EQ(parse_rotation(read_file(ISLIDE_TEST_DATA "/cube.rot"), cube_graph()).order, cube_rotation().order);
  EXPECT_EQ(kind_of([&] { parse_rotation("0: 0-1 0-2\n", cube_graph()); }), ErrorKind::InvalidRotation);
}
