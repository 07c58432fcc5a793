#include <gtest/gtest.h>

#include "islide/error.hpp"
#include "islide/generators.hpp"
#include "islide/io.hpp"
#include "islide/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace islide;

TEST(Graph6, HandEncodedExamples) {
  EXPECT_EQ(to_graph6(complete_graph(3)), "Bw");
  EXPECT_EQ(to_graph6(path_graph(3)), "Bg");
  EXPECT_EQ(to_graph6(Graph(1)), "@");
  EXPECT_EQ(from_graph6("Bw"), complete_graph(3));
  EXPECT_EQ(from_graph6("Bg"), path_graph(3));
  EXPECT_EQ(from_graph6("@"), Graph(1));
}

TEST(Graph6, RoundTripRandom) {
  std::mt19937_64 rng(oracle::test_seed());
  for (int t = 0; t < 200; ++t) {
    int n = 1 + static_cast<int>(rng() % 62);
    Graph g = oracle::random_graph(rng, n, 0.3);
    EXPECT_EQ(from_graph6(to_graph6(g)), g);
  }
}

TEST(Graph6, Rejects) {
  EXPECT_THROW(from_graph6(""), Error);
  EXPECT_THROW(from_graph6("B"), Error);         // too short
  EXPECT_THROW(from_graph6("Bww"), Error);       // too long
  EXPECT_THROW(from_graph6("Bx"), Error);        // padding bits set
  EXPECT_THROW(from_graph6(">>graph6<<Bw"), Error);
  EXPECT_THROW(from_graph6("~?@?"), Error);      // multi-byte size
  EXPECT_THROW(to_graph6(Graph(63)), Error);
  try {
    from_graph6("B");
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Parse);
  }
}

TEST(EdgeList, RoundTripAndComments) {
  Graph h = house_graph();
  EXPECT_EQ(from_edge_list(to_edge_list(h)), h);
  Graph g = from_edge_list("# triangle\n3\n0 1\n# middle\n1 2\n2 0\n");
  EXPECT_EQ(g, complete_graph(3));
}

TEST(EdgeList, Rejects) {
  EXPECT_THROW(from_edge_list(""), Error);
  EXPECT_THROW(from_edge_list("x\n"), Error);
  EXPECT_THROW(from_edge_list("3\n0 3\n"), Error);
  EXPECT_THROW(from_edge_list("3\n1 1\n"), Error);
  EXPECT_THROW(from_edge_list("3\n0 1\n1 0\n"), Error);
  EXPECT_THROW(from_edge_list("3\n0\n"), Error);
}

TEST(ParseGraphText, DetectsFormat) {
  EXPECT_EQ(parse_graph_text("Bw\n"), complete_graph(3));
  EXPECT_EQ(parse_graph_text("3\n0 1\n1 2\n"), path_graph(3));
}

TEST(Dot, MentionsEveryEdge) {
  std::string dot = to_dot(path_graph(3), {"a", "b", "c"}, "P");
  EXPECT_NE(dot.find("graph P"), std::string::npos);
  EXPECT_NE(dot.find("0 -- 1"), std::string::npos);
  EXPECT_NE(dot.find("1 -- 2"), std::string::npos);
  EXPECT_NE(dot.find("\"c\""), std::string::npos);
}
