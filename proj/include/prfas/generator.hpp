#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "prfas/graph.hpp"

namespace prfas {

// Random digraph with a planted feedback arc set.
//
// Algorithm, version 1 (any change to it must bump generator_version):
//   rng     = std::mt19937_64 seeded with `seed` (output fixed by the C++
//             standard, so other languages can reproduce it)
//   below(k)= rejection sampling: draw x until x >= (2^64 - k) mod k, return
//             x mod k
//   m       = llround(n * avg_out_degree), b = llround(back_fraction * m)
//   Forward pairs (i < j) are numbered row-major: (0,1), (0,2), ..., (1,2), ...
//   Floyd's algorithm draws m - b distinct forward indices, then b distinct
//   indices whose pairs are reversed into back edges (j, i).
//   The combined list (forward first, then back) is Fisher-Yates shuffled,
//   then a Fisher-Yates permutation `label` of the nodes is drawn, and edge
//   (i, j) is added as (label[i], label[j]) in list order.
inline constexpr int generator_version = 1;

struct GeneratorParams {
  std::uint32_t n = 0;
  double avg_out_degree = 0.0;
  double back_fraction = 0.0;
  std::uint64_t seed = 0;

  std::uint64_t edge_target() const {
    return static_cast<std::uint64_t>(std::llround(n * avg_out_degree));
  }
  std::uint64_t back_target() const {
    return static_cast<std::uint64_t>(
        std::llround(back_fraction * static_cast<double>(edge_target())));
  }
};

class InfeasibleParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GeneratedGraph {
  DirectedGraph graph;
  std::vector<EdgeId> planted_back_edges;  // ascending
};

namespace detail {

inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = rng();
    if (x >= threshold) return x % bound;
  }
}

// Floyd's sampling of `count` distinct values from [0, population), in
// insertion order.
inline std::vector<std::uint64_t> sample_distinct(std::mt19937_64& rng,
                                                  std::uint64_t population,
                                                  std::uint64_t count) {
  std::vector<std::uint64_t> picked;
  std::unordered_set<std::uint64_t> seen;
  picked.reserve(count);
  seen.reserve(count * 2);
  for (std::uint64_t j = population - count; j < population; ++j) {
    const std::uint64_t t = uniform_below(rng, j + 1);
    const std::uint64_t chosen = seen.contains(t) ? j : t;
    seen.insert(chosen);
    picked.push_back(chosen);
  }
  return picked;
}

// Row-major index -> forward pair (i, j), i < j.
inline std::pair<std::uint32_t, std::uint32_t> forward_pair(std::uint64_t n,
                                                            std::uint64_t index) {
  // Row i starts at i*(2n-i-1)/2.
  auto row_start = [n](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  std::uint64_t lo = 0, hi = n - 1;
  while (lo + 1 < hi) {
    const std::uint64_t mid = (lo + hi) / 2;
    if (row_start(mid) <= index) lo = mid; else hi = mid;
  }
  const std::uint64_t j = lo + 1 + (index - row_start(lo));
  return {static_cast<std::uint32_t>(lo), static_cast<std::uint32_t>(j)};
}

template <typename T>
void shuffle(std::mt19937_64& rng, std::vector<T>& items) {
  for (std::size_t i = items.size(); i > 1; --i) {
    const auto j = static_cast<std::size_t>(uniform_below(rng, i));
    std::swap(items[i - 1], items[j]);
  }
}

}  // namespace detail

inline GeneratedGraph generate(const GeneratorParams& p) {
  if (!(p.avg_out_degree >= 0.0) || !(p.back_fraction >= 0.0) ||
      p.back_fraction > 1.0) {
    throw InfeasibleParams("avg_out_degree must be >= 0 and back_fraction in [0, 1]");
  }
  const std::uint64_t n = p.n;
  const std::uint64_t m = p.edge_target();
  const std::uint64_t back = p.back_target();
  const std::uint64_t forward = m - back;
  const std::uint64_t capacity = n < 2 ? 0 : n * (n - 1) / 2;
  if (forward > capacity) {
    throw InfeasibleParams("forward capacity " + std::to_string(capacity) +
                           " < required forward edges " + std::to_string(forward));
  }
  if (back > capacity) {
    throw InfeasibleParams("backward capacity " + std::to_string(capacity) +
                           " < required back edges " + std::to_string(back));
  }

  std::mt19937_64 rng(p.seed);
  struct Planned {
    std::uint32_t tail, head;
    bool planted;
  };
  std::vector<Planned> planned;
  planned.reserve(m);
  for (auto index : detail::sample_distinct(rng, capacity, forward)) {
    const auto [i, j] = detail::forward_pair(n, index);
    planned.push_back({i, j, false});
  }
  for (auto index : detail::sample_distinct(rng, capacity, back)) {
    const auto [i, j] = detail::forward_pair(n, index);
    planned.push_back({j, i, true});
  }
  detail::shuffle(rng, planned);

  std::vector<std::uint32_t> label(n);
  for (std::uint32_t i = 0; i < n; ++i) label[i] = i;
  detail::shuffle(rng, label);

  GeneratedGraph out{DirectedGraph(n), {}};
  for (const auto& edge : planned) {
    const EdgeId id = out.graph.add_edge(NodeId{label[edge.tail]},
                                         NodeId{label[edge.head]});
    if (edge.planted) out.planted_back_edges.push_back(id);
  }
  return out;
}

}  // namespace prfas
