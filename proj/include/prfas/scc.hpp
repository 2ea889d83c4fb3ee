#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "prfas/graph.hpp"

namespace prfas {

struct SccDecomposition {
  std::vector<std::uint32_t> component_of;       // per node
  std::vector<std::vector<NodeId>> components;   // each sorted ascending
  std::vector<bool> nontrivial;                  // per component

  std::size_t nontrivial_count() const {
    return static_cast<std::size_t>(
        std::count(nontrivial.begin(), nontrivial.end(), true));
  }

  bool operator==(const SccDecomposition&) const = default;
};

// Tarjan's algorithm with an explicit DFS stack. Components are ordered by
// their smallest node id, and a singleton counts as nontrivial only when it
// carries a self-loop.
inline SccDecomposition strongly_connected_components(const DirectedGraph& g) {
  constexpr std::uint32_t unvisited = UINT32_MAX;
  const std::size_t n = g.node_count();

  std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<NodeId>> found;
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t next_edge;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;

    while (!call.empty()) {
      Frame& frame = call.back();
      const std::uint32_t v = frame.node;
      const auto& out = g.out_edges(NodeId{v});
      if (frame.next_edge < out.size()) {
        const std::uint32_t w = g.head(out[frame.next_edge++]).value;
        if (index[w] == unvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }

      if (low[v] == index[v]) {
        std::vector<NodeId> component;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(NodeId{w});
        } while (w != v);
        std::sort(component.begin(), component.end());
        found.push_back(std::move(component));
      }
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });

  SccDecomposition result;
  result.component_of.assign(n, 0);
  result.nontrivial.reserve(found.size());
  for (std::uint32_t c = 0; c < found.size(); ++c) {
    for (NodeId u : found[c]) result.component_of[u.value] = c;
    bool cyclic = found[c].size() > 1;
    if (!cyclic) {
      const NodeId u = found[c].front();
      cyclic = g.has_edge(u, u);
    }
    result.nontrivial.push_back(cyclic);
  }
  result.components = std::move(found);
  return result;
}

inline bool is_acyclic(const DirectedGraph& g) {
  return strongly_connected_components(g).nontrivial_count() == 0;
}

}  // namespace prfas
