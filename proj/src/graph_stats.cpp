#include "linkq/graph_stats.hpp"

#include <algorithm>

#include "linkq/kernels.hpp"

namespace linkq {

namespace {

// Σ over edges of common-neighbour counts, credited to both endpoints. Each
// triangle at v is seen through its two edges incident to v.
std::vector<std::uint64_t> edge_support_per_node(const Graph& g) {
  std::vector<std::uint64_t> support(g.node_count(), 0);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    const auto nu = g.neighbors(u);
    for (NodeId v : nu) {
      if (v <= u) continue;
      const std::uint64_t common = kernels::count_common(nu, g.neighbors(v));
      support[u] += common;
      support[v] += common;
    }
  }
  return support;
}

}  // namespace

double density(const Graph& g) {
  const std::uint64_t pairs = pair_count(g.node_count());
  if (pairs == 0) return 0.0;
  return static_cast<double>(g.edge_count()) / static_cast<double>(pairs);
}

std::vector<std::uint64_t> triangles_per_node(const Graph& g) {
  auto support = edge_support_per_node(g);
  for (auto& s : support) s /= 2;
  return support;
}

std::uint64_t triangle_count(const Graph& g) {
  std::uint64_t total = 0;
  for (std::uint64_t t : triangles_per_node(g)) total += t;
  return total / 3;
}

std::optional<double> local_clustering(const Graph& g, NodeId v) {
  g.check_node(v);
  const std::uint64_t w = wedges(g.degree(v));
  if (w == 0) return std::nullopt;
  const auto nv = g.neighbors(v);
  std::uint64_t twice = 0;
  for (NodeId u : nv) twice += kernels::count_common(nv, g.neighbors(u));
  return static_cast<double>(twice / 2) / static_cast<double>(w);
}

namespace {

double clustering_from(const Graph& g, const std::vector<std::uint64_t>& tri) {
  double sum = 0.0;
  std::size_t counted = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint64_t w = wedges(g.degree(v));
    if (w == 0) continue;
    sum += static_cast<double>(tri[v]) / static_cast<double>(w);
    ++counted;
  }
  return counted == 0 ? 0.0 : sum / static_cast<double>(counted);
}

double transitivity_from(const Graph& g, const std::vector<std::uint64_t>& tri) {
  std::uint64_t wedge_total = 0;
  std::uint64_t tri_total = 0;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    wedge_total += wedges(g.degree(v));
    tri_total += tri[v];
  }
  if (wedge_total == 0) return 0.0;
  // tri_total counts every triangle three times, which is exactly 3T.
  return static_cast<double>(tri_total) / static_cast<double>(wedge_total);
}

}  // namespace

double clustering_coefficient(const Graph& g) { return clustering_from(g, triangles_per_node(g)); }

double transitivity(const Graph& g) { return transitivity_from(g, triangles_per_node(g)); }

GraphStats graph_stats(const Graph& g) {
  GraphStats s;
  s.node_count = g.node_count();
  s.edge_count = g.edge_count();
  s.density = density(g);
  s.avg_degree = s.node_count == 0 ? 0.0 : 2.0 * static_cast<double>(s.edge_count) / static_cast<double>(s.node_count);
  for (NodeId v = 0; v < g.node_count(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));
  const auto tri = triangles_per_node(g);
  s.clustering = clustering_from(g, tri);
  s.transitivity = transitivity_from(g, tri);
  return s;
}

}  // namespace linkq
