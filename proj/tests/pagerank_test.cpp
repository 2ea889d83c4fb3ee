#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>

#include "prfas/line_digraph.hpp"
#include "prfas/pagerank.hpp"
#include "support/oracles.hpp"

namespace prfas {
namespace {

using testing::make_graph;

double total(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

TEST(PageRank, TwoCycleStaysUniform) {
  const auto pr = pagerank(make_graph(2, {{0, 1}, {1, 0}}), 5);
  EXPECT_EQ(pr, (std::vector<double>{0.5, 0.5}));
}

TEST(PageRank, ZeroSweepsIsUniform) {
  const auto g = make_graph(7, {{0, 1}, {1, 2}, {4, 4}});
  const auto pr = pagerank(g, 0);
  for (double s : pr) EXPECT_EQ(s, 1.0 / 7.0);
}

TEST(PageRank, SelfLoopKeepsMass) {
  EXPECT_EQ(pagerank(make_graph(1, {{0, 0}}), 5), std::vector<double>{1.0});
}

TEST(PageRank, SinkRetainsMass) {
  // 0 -> 1, 1 is a sink: after one sweep 0 has nothing, 1 has everything.
  const auto pr = pagerank(make_graph(2, {{0, 1}}), 1);
  EXPECT_EQ(pr, (std::vector<double>{0.0, 1.0}));
}

TEST(PageRank, Rejections) {
  EXPECT_THROW(pagerank(DirectedGraph{}, 5), GraphError);
  EXPECT_THROW(pagerank(DirectedGraph(2), -1), GraphError);
}

// Line digraph of the two triangles sharing a->b. Hand simulation from the
// uniform 0.2: sweeps cycle with period 3 through
//   (ab, bc, bd, ca, da) = (.4,.1,.1,.2,.2), (.4,.2,.2,.1,.1), (.2,.2,.2,.2,.2)
// so sweep 5 lands on (.4,.2,.2,.1,.1).
TEST(PageRank, TwoTrianglesLineDigraphHandTrace) {
  const auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {1, 3}, {3, 0}});
  const auto line = line_digraph(g, NodeId{0});
  const auto pr = pagerank(line.graph, 5);
  std::map<Edge, double> by_edge;
  for (std::size_t i = 0; i < pr.size(); ++i) by_edge[g.edge(line.origin_edge[i])] = pr[i];

  const Edge ab{NodeId{0}, NodeId{1}}, bc{NodeId{1}, NodeId{2}}, ca{NodeId{2}, NodeId{0}},
      bd{NodeId{1}, NodeId{3}}, da{NodeId{3}, NodeId{0}};
  EXPECT_NEAR(by_edge[ab], 0.4, 1e-15);
  EXPECT_NEAR(by_edge[bc], 0.2, 1e-15);
  EXPECT_NEAR(by_edge[bd], 0.2, 1e-15);
  EXPECT_NEAR(by_edge[ca], 0.1, 1e-15);
  EXPECT_NEAR(by_edge[da], 0.1, 1e-15);

  const auto dense = testing::dense_pagerank(line.graph, 5);
  for (std::size_t i = 0; i < pr.size(); ++i) EXPECT_NEAR(pr[i], dense[i], 1e-15);

  const auto three = pagerank(line.graph, 3);
  for (double s : three) EXPECT_NEAR(s, 0.2, 1e-15);
}

// Independent of adjacency insertion order: the same graph built with edges
// in reverse gives bit-identical scores.
TEST(PageRank, InsertionOrderIndependent) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = testing::random_digraph(rng, 25, 0.15, true);
    DirectedGraph reversed(g.node_count());
    auto ids = g.edges();
    for (auto it = ids.rbegin(); it != ids.rend(); ++it) reversed.add_edge(g.tail(*it), g.head(*it));
    EXPECT_EQ(pagerank(g, 7), pagerank(reversed, 7));
  }
}

// Mass, non-negativity and agreement with the dense transition-matrix oracle.
TEST(PageRank, MatchesDenseOracle) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> size(1, 30);
  std::uniform_real_distribution<double> density(0.0, 0.3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testing::random_digraph(rng, size(rng), density(rng), trial % 2 == 0);
    for (int k = 0; k <= 10; ++k) {
      const auto pr = pagerank(g, k);
      const auto dense = testing::dense_pagerank(g, k);
      ASSERT_NEAR(total(pr), 1.0, 1e-9);
      for (std::size_t i = 0; i < pr.size(); ++i) {
        ASSERT_GE(pr[i], 0.0);
        ASSERT_NEAR(pr[i], dense[i], 1e-12);
      }
    }
  }
}

}  // namespace
}  // namespace prfas
