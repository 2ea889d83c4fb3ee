#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "prfas/graph.hpp"
#include "prfas/line_digraph.hpp"
#include "prfas/pagerank.hpp"
#include "prfas/scc.hpp"

namespace prfas {

// Left-to-right node order; position 0 is leftmost.
struct LinearArrangement {
  std::vector<NodeId> order;

  static LinearArrangement identity(std::size_t n) {
    LinearArrangement a;
    a.order.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) a.order.push_back(NodeId{i});
    return a;
  }

  // Position of every node. Throws GraphError unless `order` is a permutation
  // of 0..n-1.
  std::vector<std::uint32_t> positions(std::size_t n) const {
    if (order.size() != n) {
      throw GraphError("arrangement has " + std::to_string(order.size()) +
                       " nodes, graph has " + std::to_string(n));
    }
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> pos(n, unset);
    for (std::uint32_t i = 0; i < n; ++i) {
      const auto u = order[i].value;
      if (u >= n || pos[u] != unset) {
        throw GraphError("arrangement is not a permutation (node " +
                         std::to_string(u) + ")");
      }
      pos[u] = i;
    }
    return pos;
  }

  bool operator==(const LinearArrangement&) const = default;
};

struct FasResult {
  std::vector<EdgeId> edges;  // ascending
  std::size_t size = 0;
  double percentage = 0.0;    // 100 * size / m, 0 for edgeless graphs
  std::chrono::duration<double, std::milli> elapsed{0};
};

struct ArrangementFas {
  LinearArrangement arrangement;
  FasResult fas;
};

namespace detail {

inline FasResult make_result(const DirectedGraph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  FasResult r;
  r.size = edges.size();
  r.percentage = g.edge_count() == 0
                     ? 0.0
                     : 100.0 * static_cast<double>(r.size) /
                           static_cast<double>(g.edge_count());
  r.edges = std::move(edges);
  return r;
}

class Stopwatch {
 public:
  std::chrono::duration<double, std::milli> elapsed() const {
    return std::chrono::steady_clock::now() - start_;
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace detail

// Edges pointing from a later to an earlier position. Self-loops always count.
inline FasResult backward_arcs(const DirectedGraph& g, const LinearArrangement& a) {
  const auto pos = a.positions(g.node_count());
  std::vector<EdgeId> back;
  for (EdgeId e : g.edges()) {
    if (pos[g.head(e).value] <= pos[g.tail(e).value]) back.push_back(e);
  }
  return detail::make_result(g, std::move(back));
}

// Eades-Lin-Smyth greedy arrangement.
//
// Repeatedly peels every sink onto the front of the right sequence, then
// every source onto the back of the left sequence, then the node of largest
// out-degree minus in-degree onto the left sequence. Ties go to the smallest
// node id throughout. Nodes live in per-delta buckets, so each step costs a
// logarithmic set operation rather than a scan.
inline ArrangementFas greedy_fas(const DirectedGraph& g) {
  detail::Stopwatch clock;
  const std::size_t n = g.node_count();
  std::vector<std::int64_t> out_deg(n), in_deg(n);
  std::vector<bool> removed(n, false);
  std::set<std::uint32_t> sinks, sources;
  // bucket index = delta + n
  std::vector<std::set<std::uint32_t>> buckets(2 * n + 1);
  std::size_t top = 0;

  auto bucket_of = [&](std::uint32_t u) {
    return static_cast<std::size_t>(out_deg[u] - in_deg[u] +
                                    static_cast<std::int64_t>(n));
  };
  auto classify = [&](std::uint32_t u) {
    if (out_deg[u] == 0) sinks.insert(u);
    if (in_deg[u] == 0) sources.insert(u);
    const auto b = bucket_of(u);
    buckets[b].insert(u);
    top = std::max(top, b);
  };
  for (std::uint32_t u = 0; u < n; ++u) {
    out_deg[u] = static_cast<std::int64_t>(g.out_degree(NodeId{u}));
    in_deg[u] = static_cast<std::int64_t>(g.in_degree(NodeId{u}));
    classify(u);
  }

  auto remove = [&](std::uint32_t u) {
    removed[u] = true;
    sinks.erase(u);
    sources.erase(u);
    buckets[bucket_of(u)].erase(u);
    for (EdgeId e : g.out_edges(NodeId{u})) {
      const auto w = g.head(e).value;
      if (w == u || removed[w]) continue;
      buckets[bucket_of(w)].erase(w);
      --in_deg[w];
      classify(w);
    }
    for (EdgeId e : g.in_edges(NodeId{u})) {
      const auto w = g.tail(e).value;
      if (w == u || removed[w]) continue;
      buckets[bucket_of(w)].erase(w);
      --out_deg[w];
      classify(w);
    }
  };

  std::vector<NodeId> left, right_reversed;
  std::size_t remaining = n;
  while (remaining > 0) {
    while (!sinks.empty()) {
      const auto u = *sinks.begin();
      right_reversed.push_back(NodeId{u});
      remove(u);
      --remaining;
    }
    while (!sources.empty()) {
      const auto u = *sources.begin();
      left.push_back(NodeId{u});
      remove(u);
      --remaining;
    }
    if (remaining == 0) break;
    while (buckets[top].empty()) --top;
    const auto u = *buckets[top].begin();
    left.push_back(NodeId{u});
    remove(u);
    --remaining;
  }

  ArrangementFas result;
  result.arrangement.order = std::move(left);
  result.arrangement.order.insert(result.arrangement.order.end(),
                                  right_reversed.rbegin(), right_reversed.rend());
  result.fas = backward_arcs(g, result.arrangement);
  result.fas.elapsed = clock.elapsed();
  return result;
}

// Brandenburg-Hanauer insertion sort.
//
// Nodes are taken in `initial` order; each is moved to the position among the
// already placed prefix that minimises its backward arcs, preferring the
// leftmost such position. O(n^2) plus degree terms: neighbour membership is an
// O(1) lookup into a per-node scratch mark.
inline ArrangementFas sort_fas(const DirectedGraph& g, const LinearArrangement& initial) {
  detail::Stopwatch clock;
  const std::size_t n = g.node_count();
  initial.positions(n);

  enum : std::uint8_t { kNone = 0, kOut = 1, kIn = 2 };
  std::vector<std::uint8_t> mark(n, kNone);
  std::vector<NodeId> order;
  order.reserve(n);

  for (NodeId v : initial.order) {
    for (EdgeId e : g.out_edges(v)) mark[g.head(e).value] |= kOut;
    for (EdgeId e : g.in_edges(v)) mark[g.tail(e).value] |= kIn;

    long val = 0, best = 0;
    std::size_t loc = order.size();
    for (std::size_t j = order.size(); j-- > 0;) {
      const auto w = order[j].value;
      if (mark[w] & kOut) {
        --val;
      } else if (mark[w] & kIn) {
        ++val;
      }
      if (val <= best) {
        best = val;
        loc = j;
      }
    }
    order.insert(order.begin() + static_cast<std::ptrdiff_t>(loc), v);

    for (EdgeId e : g.out_edges(v)) mark[g.head(e).value] = kNone;
    for (EdgeId e : g.in_edges(v)) mark[g.tail(e).value] = kNone;
  }

  ArrangementFas result;
  result.arrangement.order = std::move(order);
  result.fas = backward_arcs(g, result.arrangement);
  result.fas.elapsed = clock.elapsed();
  return result;
}

inline ArrangementFas sort_fas(const DirectedGraph& g) {
  return sort_fas(g, LinearArrangement::identity(g.node_count()));
}

// Working-copy edge count after each outer round of page_rank_fas.
struct PageRankFasTrace {
  std::vector<std::size_t> remaining_edges;
};

// Line-digraph PageRank heuristic.
//
// While the working copy has a cycle: decompose into SCCs, and for every
// nontrivial one build its line digraph, run `iterations` PageRank sweeps,
// and delete the source edge whose line-node scores highest (ties: smallest
// EdgeId). Every round removes at least one edge, so the loop terminates.
inline FasResult page_rank_fas(const DirectedGraph& g,
                               int iterations = default_pagerank_iterations,
                               PageRankFasTrace* trace = nullptr) {
  detail::Stopwatch clock;
  DirectedGraph work = g;
  std::vector<EdgeId> fas;

  for (;;) {
    const auto scc = strongly_connected_components(work);
    if (scc.nontrivial_count() == 0) break;
    for (std::size_t c = 0; c < scc.components.size(); ++c) {
      if (!scc.nontrivial[c]) continue;
      const auto sub = induced_subgraph(work, scc.components[c]);
      const auto line = line_digraph(sub.graph, NodeId{0});
      const auto score = pagerank(line.graph, iterations);

      std::size_t best = 0;
      EdgeId best_edge = sub.global_edge[line.origin_edge[0].value];
      for (std::size_t i = 1; i < score.size(); ++i) {
        const EdgeId e = sub.global_edge[line.origin_edge[i].value];
        if (score[i] > score[best] || (score[i] == score[best] && e < best_edge)) {
          best = i;
          best_edge = e;
        }
      }
      work.remove_edge(best_edge);
      fas.push_back(best_edge);
    }
    if (trace) trace->remaining_edges.push_back(work.edge_count());
  }

  auto result = detail::make_result(g, std::move(fas));
  result.elapsed = clock.elapsed();
  return result;
}

}  // namespace prfas
