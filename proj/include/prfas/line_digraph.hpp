#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "prfas/graph.hpp"

namespace prfas {

// Directed line graph: one line-node per source edge, and a line-edge
// L(u,v) -> L(v,w) for every directed path u -> v -> w of length two.
struct LineDigraph {
  DirectedGraph graph;
  std::vector<EdgeId> origin_edge;           // line-node -> source edge
  std::vector<std::vector<NodeId>> nodes_from;  // source node -> line-nodes of its out-edges
};

namespace detail {

inline LineDigraph empty_line_digraph(const DirectedGraph& g) {
  const auto ids = g.edges();
  LineDigraph line{DirectedGraph(ids.size()), ids,
                   std::vector<std::vector<NodeId>>(g.node_count())};
  std::vector<std::uint32_t> line_of(g.edge_capacity(), 0);
  for (std::uint32_t i = 0; i < ids.size(); ++i) line_of[ids[i].value] = i;
  for (std::uint32_t u = 0; u < g.node_count(); ++u) {
    for (EdgeId e : g.out_edges(NodeId{u})) {
      line.nodes_from[u].push_back(NodeId{line_of[e.value]});
    }
  }
  return line;
}

}  // namespace detail

// DFS construction over a strongly connected graph, starting at `start`.
//
// Each node is entered once. The edge that enters a node feeds every out-edge
// of that node; an edge into an already visited node links to all of that
// node's out-edges directly. The root is entered with no predecessor.
// Throws GraphError when some edge is never reached, which happens exactly
// when the input is not strongly connected from `start`.
inline LineDigraph line_digraph(const DirectedGraph& g, NodeId start) {
  LineDigraph line = detail::empty_line_digraph(g);
  if (g.edge_count() == 0) return line;
  if (start.value >= g.node_count()) {
    throw GraphError("line digraph start node out of range");
  }

  constexpr std::uint32_t none = UINT32_MAX;
  struct Frame {
    std::uint32_t node;
    std::uint32_t prev;  // line-node that entered this node, or none
    std::size_t next;    // position in nodes_from[node]
  };

  std::vector<bool> visited(g.node_count(), false);
  std::size_t processed = 0;
  std::vector<Frame> stack{{start.value, none, 0}};
  visited[start.value] = true;

  while (!stack.empty()) {
    Frame& frame = stack.back();
    const auto& outgoing = line.nodes_from[frame.node];
    if (frame.next == outgoing.size()) {
      stack.pop_back();
      continue;
    }
    const NodeId z = outgoing[frame.next++];
    ++processed;
    if (frame.prev != none) line.graph.add_edge(NodeId{frame.prev}, z);

    const std::uint32_t u = g.head(line.origin_edge[z.value]).value;
    if (!visited[u]) {
      visited[u] = true;
      stack.push_back({u, z.value, 0});  // invalidates `frame`
    } else {
      for (NodeId k : line.nodes_from[u]) line.graph.add_edge(z, k);
    }
  }

  if (processed != g.edge_count()) {
    throw GraphError("line digraph traversal covered " +
                     std::to_string(processed) + " of " +
                     std::to_string(g.edge_count()) +
                     " edges; input is not strongly connected");
  }
  return line;
}

// Definition-based construction over all composable edge pairs. O(m^2);
// intended as a test oracle.
inline LineDigraph line_digraph_oracle(const DirectedGraph& g) {
  LineDigraph line = detail::empty_line_digraph(g);
  const std::size_t m = line.origin_edge.size();
  for (std::uint32_t a = 0; a < m; ++a) {
    for (std::uint32_t b = 0; b < m; ++b) {
      if (g.head(line.origin_edge[a]) == g.tail(line.origin_edge[b])) {
        line.graph.add_edge(NodeId{a}, NodeId{b});
      }
    }
  }
  return line;
}

}  // namespace prfas
