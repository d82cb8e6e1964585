#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "linkq/graph.hpp"

namespace linkq {

struct GraphStats {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double density = 0.0;
  double avg_degree = 0.0;
  std::size_t max_degree = 0;
  double clustering = 0.0;
  double transitivity = 0.0;
};

/// 2m / (n(n-1)); 0 when n < 2.
double density(const Graph& g);

/// Per-node triangle counts Δ(v): the number of triangles containing v.
std::vector<std::uint64_t> triangles_per_node(const Graph& g);

/// Number of distinct triangles in g.
std::uint64_t triangle_count(const Graph& g);

/// Number of pairs of neighbours of v, d(v)(d(v)-1)/2.
constexpr std::uint64_t wedges(std::uint64_t degree) { return degree < 2 ? 0 : degree * (degree - 1) / 2; }

/// Δ(v)/∨(v), or nullopt when d(v) < 2. Throws GraphError for a bad id.
std::optional<double> local_clustering(const Graph& g, NodeId v);

/// Mean local clustering over nodes of degree >= 2 (0 if there are none).
/// Nodes of degree 0 or 1 are left out of the average rather than counted
/// as zeros.
double clustering_coefficient(const Graph& g);

/// 3T / Σ_v ∨(v) with T the number of distinct triangles; 0 without wedges.
double transitivity(const Graph& g);

GraphStats graph_stats(const Graph& g);

}  // namespace linkq
