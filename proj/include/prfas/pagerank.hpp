#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "prfas/graph.hpp"

namespace prfas {

inline constexpr int default_pagerank_iterations = 5;

// Undamped PageRank: `iterations` synchronous sweeps from the uniform vector.
//
//   next(v) = sum over in-neighbours u of score(u) / outdeg(u)
//             + score(v) if v is a sink
//
// Sinks keep their own mass, so every sweep preserves the total. There is no
// teleport term and no convergence test. In-neighbours are summed in
// ascending node order, which makes the result independent of adjacency
// insertion order.
inline std::vector<double> pagerank(const DirectedGraph& g, int iterations) {
  const std::size_t n = g.node_count();
  if (n == 0) throw GraphError("pagerank of an empty graph");
  if (iterations < 0) throw GraphError("negative pagerank iteration count");

  // CSR of in-neighbours, each row sorted.
  std::vector<std::uint32_t> offset(n + 1, 0);
  for (std::uint32_t v = 0; v < n; ++v) {
    offset[v + 1] = offset[v] + static_cast<std::uint32_t>(g.in_degree(NodeId{v}));
  }
  std::vector<std::uint32_t> source(offset[n]);
  std::vector<double> out_degree(n, 0.0);
  for (std::uint32_t v = 0; v < n; ++v) {
    auto* row = source.data() + offset[v];
    std::size_t i = 0;
    for (EdgeId e : g.in_edges(NodeId{v})) row[i++] = g.tail(e).value;
    std::sort(row, row + i);
    out_degree[v] = static_cast<double>(g.out_degree(NodeId{v}));
  }

  std::vector<double> score(n, 1.0 / static_cast<double>(n));
  std::vector<double> next(n);
  for (int sweep = 0; sweep < iterations; ++sweep) {
    for (std::uint32_t v = 0; v < n; ++v) {
      double sum = 0.0;
      for (std::uint32_t i = offset[v]; i < offset[v + 1]; ++i) {
        sum += score[source[i]] / out_degree[source[i]];
      }
      if (out_degree[v] == 0.0) sum += score[v];
      next[v] = sum;
    }
    score.swap(next);
  }
  return score;
}

}  // namespace prfas
