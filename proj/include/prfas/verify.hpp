#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "prfas/graph.hpp"

namespace prfas {

// Checks that removing `fas` leaves `g` acyclic by Kahn peeling. Shares no
// code with the SCC routines so the two cyclicity tests can vouch for each
// other. Throws GraphError for ids that are not live edges of `g`.
inline bool validate_fas(const DirectedGraph& g, std::span<const EdgeId> fas) {
  std::vector<bool> dropped(g.edge_capacity(), false);
  for (EdgeId e : fas) {
    if (!g.is_live(e)) {
      throw GraphError("FAS names edge " + std::to_string(e.value) +
                       ", which is not in the graph");
    }
    dropped[e.value] = true;
  }

  const std::size_t n = g.node_count();
  std::vector<std::size_t> indegree(n, 0);
  for (EdgeId e : g.edges()) {
    if (!dropped[e.value]) ++indegree[g.head(e).value];
  }
  std::vector<std::uint32_t> ready;
  for (std::uint32_t u = 0; u < n; ++u) {
    if (indegree[u] == 0) ready.push_back(u);
  }
  std::size_t peeled = 0;
  while (!ready.empty()) {
    const auto u = ready.back();
    ready.pop_back();
    ++peeled;
    for (EdgeId e : g.out_edges(NodeId{u})) {
      if (dropped[e.value]) continue;
      if (--indegree[g.head(e).value] == 0) ready.push_back(g.head(e).value);
    }
  }
  return peeled == n;
}

inline double fas_percentage(const DirectedGraph& g, std::size_t fas_size) {
  if (g.edge_count() == 0) throw GraphError("FAS percentage of an edgeless graph");
  return 100.0 * static_cast<double>(fas_size) / static_cast<double>(g.edge_count());
}

inline double fas_percentage(const DirectedGraph& g, std::span<const EdgeId> fas) {
  return fas_percentage(g, fas.size());
}

}  // namespace prfas
