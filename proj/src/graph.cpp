#include "linkq/graph.hpp"

#include <algorithm>
#include <string>

namespace linkq {

Graph Graph::from_edges(std::size_t node_count, std::span<const Edge> edges,
                        std::size_t* dropped_self_loops, std::size_t* dropped_duplicates) {
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  std::size_t loops = 0;
  for (const Edge& e : edges) {
    if (e.u >= node_count || e.v >= node_count) {
      throw GraphError("edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                       ") references a node outside 0.." + std::to_string(node_count));
    }
    if (e.u == e.v) {
      ++loops;
      continue;
    }
    canon.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(canon.begin(), canon.end(),
            [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
  const auto last = std::unique(canon.begin(), canon.end());
  const std::size_t dups = static_cast<std::size_t>(canon.end() - last);
  canon.erase(last, canon.end());

  if (dropped_self_loops) *dropped_self_loops = loops;
  if (dropped_duplicates) *dropped_duplicates = dups;

  Graph g;
  g.edge_count_ = canon.size();
  g.offsets_.assign(node_count + 1, 0);
  for (const Edge& e : canon) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  for (std::size_t i = 1; i <= node_count; ++i) g.offsets_[i] += g.offsets_[i - 1];
  g.neighbors_.resize(2 * canon.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // canon is sorted by (u, v), so for each node the v-side entries arrive in
  // ascending order, and the u-side entries (smaller ids) are filled first.
  for (const Edge& e : canon) g.neighbors_[cursor[e.v]++] = e.u;
  for (const Edge& e : canon) g.neighbors_[cursor[e.u]++] = e.v;
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  if (u == v) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

}  // namespace linkq
