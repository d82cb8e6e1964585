#pragma once

// Immutable undirected simple graph used as the hidden ground truth.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linkq {

using NodeId = std::uint32_t;

struct Edge {
  NodeId u;
  NodeId v;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Undirected simple graph with dense node ids 0..n-1. Each adjacency set is
/// stored as a sorted vector in one contiguous buffer (CSR layout).
class Graph {
 public:
  Graph() = default;

  /// Builds from an arbitrary edge list. Self-loops and duplicate edges
  /// (in either orientation) are dropped; the counts are reported through
  /// the optional out-parameters. Throws GraphError for ids >= node_count.
  static Graph from_edges(std::size_t node_count, std::span<const Edge> edges,
                          std::size_t* dropped_self_loops = nullptr,
                          std::size_t* dropped_duplicates = nullptr);

  std::size_t node_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    check_node(v);
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }

  std::size_t degree(NodeId v) const {
    check_node(v);
    return offsets_[v + 1] - offsets_[v];
  }

  bool has_edge(NodeId u, NodeId v) const;

  /// Edges with u < v in ascending (u, v) order.
  std::vector<Edge> edges() const;

  void check_node(NodeId v) const {
    if (v >= node_count()) throw GraphError("invalid node id " + std::to_string(v));
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<NodeId> neighbors_;
  std::size_t edge_count_ = 0;
};

/// Number of unordered node pairs n(n-1)/2.
constexpr std::uint64_t pair_count(std::uint64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace linkq
