#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace prfas {

// Dense node index, 0..n-1.
struct NodeId {
  std::uint32_t value = 0;
  constexpr auto operator<=>(const NodeId&) const = default;
};

// Stable edge index. Removal never renumbers surviving edges.
struct EdgeId {
  std::uint32_t value = 0;
  constexpr auto operator<=>(const EdgeId&) const = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  NodeId tail;
  NodeId head;
  constexpr auto operator<=>(const Edge&) const = default;
};

// Simple digraph with fixed node set and tombstoned edge removal.
//
// Self-loops are allowed; parallel edges are not. Adjacency lists hold live
// edges only, in insertion order.
class DirectedGraph {
 public:
  DirectedGraph() = default;
  explicit DirectedGraph(std::size_t node_count)
      : out_(node_count), in_(node_count) {}

  std::size_t node_count() const { return out_.size(); }
  std::size_t edge_count() const { return live_edges_; }
  // Upper bound on EdgeId values ever issued, live or dead.
  std::size_t edge_capacity() const { return edges_.size(); }

  EdgeId add_edge(NodeId tail, NodeId head) {
    check_node(tail);
    check_node(head);
    if (!keys_.insert(key(tail, head)).second) {
      throw GraphError("duplicate edge (" + std::to_string(tail.value) + ", " +
                       std::to_string(head.value) + ")");
    }
    const EdgeId id{static_cast<std::uint32_t>(edges_.size())};
    edges_.push_back({{tail, head}, true});
    out_[tail.value].push_back(id);
    in_[head.value].push_back(id);
    ++live_edges_;
    return id;
  }

  void remove_edge(EdgeId e) {
    if (!is_live(e)) {
      throw GraphError("edge " + std::to_string(e.value) + " is not live");
    }
    auto& slot = edges_[e.value];
    slot.live = false;
    keys_.erase(key(slot.edge.tail, slot.edge.head));
    erase_from(out_[slot.edge.tail.value], e);
    erase_from(in_[slot.edge.head.value], e);
    --live_edges_;
  }

  bool is_live(EdgeId e) const {
    return e.value < edges_.size() && edges_[e.value].live;
  }

  bool has_edge(NodeId tail, NodeId head) const {
    return keys_.contains(key(tail, head));
  }

  // Endpoints of an edge; valid for dead edges too.
  const Edge& edge(EdgeId e) const {
    if (e.value >= edges_.size()) {
      throw GraphError("unknown edge " + std::to_string(e.value));
    }
    return edges_[e.value].edge;
  }
  NodeId tail(EdgeId e) const { return edge(e).tail; }
  NodeId head(EdgeId e) const { return edge(e).head; }

  const std::vector<EdgeId>& out_edges(NodeId u) const {
    check_node(u);
    return out_[u.value];
  }
  const std::vector<EdgeId>& in_edges(NodeId u) const {
    check_node(u);
    return in_[u.value];
  }

  std::size_t out_degree(NodeId u) const { return out_edges(u).size(); }
  std::size_t in_degree(NodeId u) const { return in_edges(u).size(); }

  std::int64_t delta(NodeId u) const {
    return static_cast<std::int64_t>(out_degree(u)) -
           static_cast<std::int64_t>(in_degree(u));
  }
  bool is_sink(NodeId u) const { return out_degree(u) == 0; }
  bool is_source(NodeId u) const { return in_degree(u) == 0; }

  // Live edge ids in ascending order.
  std::vector<EdgeId> edges() const {
    std::vector<EdgeId> ids;
    ids.reserve(live_edges_);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      if (edges_[i].live) ids.push_back(EdgeId{i});
    }
    return ids;
  }

  // Copy with dead slots dropped. mapping[new id] = old id.
  DirectedGraph compact(std::vector<EdgeId>* mapping = nullptr) const {
    DirectedGraph out(node_count());
    if (mapping) mapping->clear();
    for (EdgeId e : edges()) {
      out.add_edge(tail(e), head(e));
      if (mapping) mapping->push_back(e);
    }
    return out;
  }

  // True iff adjacency lists, degree totals and the duplicate index mirror the
  // live edge table exactly.
  bool audit() const {
    std::size_t live = 0, out_total = 0, in_total = 0;
    std::vector<std::size_t> out_deg(node_count(), 0), in_deg(node_count(), 0);
    for (std::uint32_t i = 0; i < edges_.size(); ++i) {
      const auto& slot = edges_[i];
      if (!slot.live) continue;
      ++live;
      if (slot.edge.tail.value >= node_count() ||
          slot.edge.head.value >= node_count()) {
        return false;
      }
      ++out_deg[slot.edge.tail.value];
      ++in_deg[slot.edge.head.value];
      if (!keys_.contains(key(slot.edge.tail, slot.edge.head))) return false;
    }
    if (live != live_edges_ || keys_.size() != live) return false;
    for (std::size_t u = 0; u < node_count(); ++u) {
      if (out_[u].size() != out_deg[u] || in_[u].size() != in_deg[u]) {
        return false;
      }
      for (EdgeId e : out_[u]) {
        if (!is_live(e) || edges_[e.value].edge.tail.value != u) return false;
      }
      for (EdgeId e : in_[u]) {
        if (!is_live(e) || edges_[e.value].edge.head.value != u) return false;
      }
      out_total += out_[u].size();
      in_total += in_[u].size();
    }
    return out_total == live && in_total == live;
  }

 private:
  struct Slot {
    Edge edge;
    bool live;
  };

  static std::uint64_t key(NodeId tail, NodeId head) {
    return (std::uint64_t{tail.value} << 32) | head.value;
  }

  static void erase_from(std::vector<EdgeId>& list, EdgeId e) {
    for (auto it = list.begin(); it != list.end(); ++it) {
      if (*it == e) {
        list.erase(it);
        return;
      }
    }
  }

  void check_node(NodeId u) const {
    if (u.value >= out_.size()) {
      throw GraphError("node " + std::to_string(u.value) + " out of range (n=" +
                       std::to_string(out_.size()) + ")");
    }
  }

  std::vector<Slot> edges_;
  std::vector<std::vector<EdgeId>> out_;
  std::vector<std::vector<EdgeId>> in_;
  std::unordered_set<std::uint64_t> keys_;
  std::size_t live_edges_ = 0;
};

// Node-induced subgraph with explicit local <-> global id maps.
struct InducedSubgraph {
  DirectedGraph graph;
  std::vector<NodeId> global_node;  // indexed by local node
  std::vector<EdgeId> global_edge;  // indexed by local edge
};

// Local ids follow the order of `nodes`; local edges follow ascending global
// EdgeId.
inline InducedSubgraph induced_subgraph(const DirectedGraph& g,
                                        const std::vector<NodeId>& nodes) {
  constexpr std::uint32_t absent = UINT32_MAX;
  std::vector<std::uint32_t> local(g.node_count(), absent);
  InducedSubgraph sub{DirectedGraph(nodes.size()), nodes, {}};
  for (std::uint32_t i = 0; i < nodes.size(); ++i) local.at(nodes[i].value) = i;

  std::vector<EdgeId> inside;
  for (NodeId u : nodes) {
    for (EdgeId e : g.out_edges(u)) {
      if (local[g.head(e).value] != absent) inside.push_back(e);
    }
  }
  std::sort(inside.begin(), inside.end());
  for (EdgeId e : inside) {
    sub.graph.add_edge(NodeId{local[g.tail(e).value]},
                       NodeId{local[g.head(e).value]});
    sub.global_edge.push_back(e);
  }
  return sub;
}

}  // namespace prfas

template <>
struct std::hash<prfas::NodeId> {
  std::size_t operator()(prfas::NodeId u) const noexcept {
    return std::hash<std::uint32_t>{}(u.value);
  }
};

template <>
struct std::hash<prfas::EdgeId> {
  std::size_t operator()(prfas::EdgeId e) const noexcept {
    return std::hash<std::uint32_t>{}(e.value);
  }
};
