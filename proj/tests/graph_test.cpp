#include <gtest/gtest.h>

#include <map>
#include <random>

#include "prfas/graph.hpp"
#include "prfas/scc.hpp"
#include "support/oracles.hpp"

namespace prfas {
namespace {

using testing::make_graph;

TEST(DirectedGraph, FirstInsertion) {
  DirectedGraph g(2);
  const EdgeId e = g.add_edge(NodeId{0}, NodeId{1});
  EXPECT_EQ(e, EdgeId{0});
  EXPECT_EQ(g.out_degree(NodeId{0}), 1u);
  EXPECT_EQ(g.in_degree(NodeId{1}), 1u);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(DirectedGraph, RejectsDuplicateEdge) {
  DirectedGraph g(2);
  g.add_edge(NodeId{0}, NodeId{1});
  EXPECT_THROW(g.add_edge(NodeId{0}, NodeId{1}), GraphError);
  EXPECT_EQ(g.edge_count(), 1u);
}

TEST(DirectedGraph, RejectsInvalidNode) {
  DirectedGraph g(2);
  EXPECT_THROW(g.add_edge(NodeId{0}, NodeId{2}), GraphError);
  EXPECT_THROW(g.add_edge(NodeId{5}, NodeId{0}), GraphError);
}

TEST(DirectedGraph, SelfLoopIsRepresentable) {
  DirectedGraph g(2);
  g.add_edge(NodeId{0}, NodeId{0});
  EXPECT_EQ(g.out_degree(NodeId{0}), 1u);
  EXPECT_EQ(g.in_degree(NodeId{0}), 1u);
  EXPECT_FALSE(g.is_sink(NodeId{0}));
  EXPECT_FALSE(g.is_source(NodeId{0}));
}

TEST(DirectedGraph, RemoveBreaksTwoCycle) {
  auto g = make_graph(2, {{0, 1}, {1, 0}});
  g.remove_edge(EdgeId{0});
  ASSERT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges(), std::vector<EdgeId>{EdgeId{1}});
  EXPECT_EQ(g.tail(EdgeId{1}), NodeId{1});
  EXPECT_TRUE(is_acyclic(g));
}

TEST(DirectedGraph, RemoveTwiceRejected) {
  auto g = make_graph(2, {{0, 1}});
  g.remove_edge(EdgeId{0});
  EXPECT_THROW(g.remove_edge(EdgeId{0}), GraphError);
  EXPECT_THROW(g.remove_edge(EdgeId{7}), GraphError);
}

TEST(DirectedGraph, RemoveBreaksTriangle) {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  EXPECT_FALSE(is_acyclic(g));
  g.remove_edge(EdgeId{2});
  EXPECT_TRUE(is_acyclic(g));
  EXPECT_EQ(g.out_degree(NodeId{2}), 0u);
  EXPECT_EQ(g.in_degree(NodeId{0}), 0u);
}

TEST(DirectedGraph, RemovedPairCanBeReAdded) {
  auto g = make_graph(2, {{0, 1}});
  g.remove_edge(EdgeId{0});
  EXPECT_EQ(g.add_edge(NodeId{0}, NodeId{1}), EdgeId{1});
  EXPECT_TRUE(g.audit());
}

TEST(DirectedGraph, Delta) {
  auto triangle = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  for (std::uint32_t u = 0; u < 3; ++u) EXPECT_EQ(triangle.delta(NodeId{u}), 0);

  auto star = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  EXPECT_EQ(star.delta(NodeId{0}), 3);
  EXPECT_EQ(star.delta(NodeId{1}), -1);

  auto g = make_graph(4, {{0, 1}, {2, 1}, {1, 3}});
  EXPECT_EQ(g.delta(NodeId{1}), -1);
}

TEST(DirectedGraph, SinkAndSource) {
  DirectedGraph isolated(1);
  EXPECT_TRUE(isolated.is_sink(NodeId{0}));
  EXPECT_TRUE(isolated.is_source(NodeId{0}));

  auto path = make_graph(2, {{0, 1}});
  EXPECT_TRUE(path.is_source(NodeId{0}));
  EXPECT_FALSE(path.is_sink(NodeId{0}));
  EXPECT_TRUE(path.is_sink(NodeId{1}));
  EXPECT_FALSE(path.is_source(NodeId{1}));
}

TEST(DirectedGraph, CompactDropsTombstones) {
  auto g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
  g.remove_edge(EdgeId{1});
  std::vector<EdgeId> mapping;
  const auto c = g.compact(&mapping);
  EXPECT_EQ(c.edge_capacity(), 2u);
  EXPECT_EQ(mapping, (std::vector<EdgeId>{EdgeId{0}, EdgeId{2}}));
  EXPECT_EQ(c.edge(EdgeId{1}), g.edge(EdgeId{2}));
}

TEST(DirectedGraph, InducedSubgraphKeepsMapping) {
  auto g = make_graph(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 1}});
  const auto sub = induced_subgraph(g, {NodeId{1}, NodeId{2}, NodeId{3}});
  EXPECT_EQ(sub.graph.node_count(), 3u);
  ASSERT_EQ(sub.graph.edge_count(), 3u);
  EXPECT_EQ(sub.global_edge, (std::vector<EdgeId>{EdgeId{1}, EdgeId{3}, EdgeId{4}}));
  for (std::uint32_t i = 0; i < 3; ++i) {
    const auto local = sub.graph.edge(EdgeId{i});
    const auto global = g.edge(sub.global_edge[i]);
    EXPECT_EQ(sub.global_node[local.tail.value], global.tail);
    EXPECT_EQ(sub.global_node[local.head.value], global.head);
  }
}

// Random add/remove sequence; checks degree sums, EdgeId stability and the
// adjacency audit throughout.
TEST(DirectedGraph, RandomMutationProperty) {
  std::mt19937_64 rng(20240601);
  constexpr std::uint32_t n = 30;
  DirectedGraph g(n);
  std::map<std::uint32_t, Edge> expected;
  std::uniform_int_distribution<std::uint32_t> node(0, n - 1);
  std::bernoulli_distribution add(0.6);

  for (int step = 0; step < 12000; ++step) {
    if (add(rng) || expected.empty()) {
      const NodeId t{node(rng)}, h{node(rng)};
      if (g.has_edge(t, h)) {
        EXPECT_THROW(g.add_edge(t, h), GraphError);
      } else {
        expected[g.add_edge(t, h).value] = {t, h};
      }
    } else {
      auto it = expected.begin();
      std::advance(it, std::uniform_int_distribution<std::size_t>(0, expected.size() - 1)(rng));
      g.remove_edge(EdgeId{it->first});
      expected.erase(it);
    }

    if (step % 97 == 0) {
      ASSERT_TRUE(g.audit()) << "step " << step;
      std::size_t out_sum = 0, in_sum = 0;
      for (std::uint32_t u = 0; u < n; ++u) {
        out_sum += g.out_degree(NodeId{u});
        in_sum += g.in_degree(NodeId{u});
      }
      ASSERT_EQ(out_sum, g.edge_count());
      ASSERT_EQ(in_sum, g.edge_count());
      ASSERT_EQ(g.edge_count(), expected.size());
      for (const auto& [id, edge] : expected) {
        ASSERT_TRUE(g.is_live(EdgeId{id}));
        ASSERT_EQ(g.edge(EdgeId{id}), edge);
      }
    }
  }
  EXPECT_TRUE(g.audit());
}

}  // namespace
}  // namespace prfas
