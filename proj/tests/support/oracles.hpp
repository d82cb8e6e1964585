#pragma once

// Test-only oracles. Nothing here calls into the library's statistics or
// strategy code; graphs are read only through has_edge / node_count.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "linkq/graph.hpp"
#include "linkq/oracle.hpp"
#include "linkq/strategies.hpp"

namespace linkq::testing {

/// Graph from a bitmask over the pairs of n nodes in (u, v), u < v row order.
inline Graph graph_from_mask(std::uint32_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::uint32_t bit = 0;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v, ++bit)
      if (mask >> bit & 1u) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph random_graph(std::uint32_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline bool is_connected(const Graph& g) {
  const std::size_t n = g.node_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<NodeId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const NodeId u = stack.back();
    stack.pop_back();
    for (NodeId v = 0; v < n; ++v) {
      if (!seen[v] && g.has_edge(u, v)) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
    }
  }
  return count == n;
}

struct TripleStats {
  std::vector<std::uint64_t> triangles_at;  // per node
  std::vector<std::uint64_t> wedges_at;     // per node, pairs of neighbours
  std::uint64_t triangles = 0;
};

/// Enumerates every node triple.
inline TripleStats brute_force_triples(const Graph& g) {
  const auto n = static_cast<NodeId>(g.node_count());
  TripleStats s{std::vector<std::uint64_t>(n, 0), std::vector<std::uint64_t>(n, 0), 0};
  for (NodeId a = 0; a < n; ++a)
    for (NodeId b = a + 1; b < n; ++b)
      for (NodeId c = b + 1; c < n; ++c) {
        const bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), bc = g.has_edge(b, c);
        if (ab && ac && bc) {
          ++s.triangles;
          ++s.triangles_at[a];
          ++s.triangles_at[b];
          ++s.triangles_at[c];
        }
        if (ab && ac) ++s.wedges_at[a];
        if (ab && bc) ++s.wedges_at[b];
        if (ac && bc) ++s.wedges_at[c];
      }
  return s;
}

inline double brute_force_clustering(const Graph& g) {
  const auto s = brute_force_triples(g);
  double sum = 0;
  int counted = 0;
  for (std::size_t v = 0; v < s.wedges_at.size(); ++v) {
    if (s.wedges_at[v] == 0) continue;
    sum += static_cast<double>(s.triangles_at[v]) / static_cast<double>(s.wedges_at[v]);
    ++counted;
  }
  return counted ? sum / counted : 0.0;
}

inline double brute_force_transitivity(const Graph& g) {
  const auto s = brute_force_triples(g);
  std::uint64_t wedges = 0;
  for (auto w : s.wedges_at) wedges += w;
  return wedges ? 3.0 * static_cast<double>(s.triangles) / static_cast<double>(wedges) : 0.0;
}

/// Straight-line interpreter of the six strategies over an adjacency matrix,
/// written against the pseudocode and the documented tie-breaking and
/// pair-sampling rules. Produces the cumulative curve (unpadded).
class ReferenceInterpreter {
 public:
  ReferenceInterpreter(const Graph& g, std::uint64_t budget, std::uint64_t seed)
      : n_(static_cast<NodeId>(g.node_count())),
        budget_(budget),
        rng_(seed),
        edge_(n_ * n_, false),
        tested_(n_ * n_, false),
        known_(n_) {
    for (NodeId u = 0; u < n_; ++u)
      for (NodeId v = 0; v < n_; ++v) edge_[u * n_ + v] = g.has_edge(u, v);
  }

  std::vector<std::uint32_t> run(StrategyKind kind, std::uint64_t k, Bootstrap bootstrap) {
    try {
      switch (kind) {
        case StrategyKind::random: random_phase(k); break;
        case StrategyKind::v_random: v_random_phase(k); break;
        case StrategyKind::complete_simple:
          boot(k, bootstrap);
          complete_simple_phase();
          break;
        case StrategyKind::complete:
          boot(k, bootstrap);
          complete_phase();
          break;
        case StrategyKind::tbf:
          boot(k, bootstrap);
          tbf_phase();
          break;
        case StrategyKind::tbf_complete:
          boot(k, bootstrap);
          tbf_phase();
          complete_phase();
          break;
      }
    } catch (const Stop&) {
    }
    return curve_;
  }

 private:
  struct Stop {};

  std::uint64_t pairs() const { return static_cast<std::uint64_t>(n_) * (n_ - 1) / 2; }
  std::uint64_t found() const { return curve_.empty() ? 0 : curve_.back(); }
  bool was_tested(NodeId u, NodeId v) const { return tested_[u * n_ + v]; }
  std::size_t dprime(NodeId v) const { return known_[v].size(); }

  bool test(NodeId u, NodeId v) {
    if (curve_.size() >= budget_) throw Stop{};
    if (u == v || was_tested(u, v)) throw std::logic_error("reference interpreter repeated a pair");
    tested_[u * n_ + v] = tested_[v * n_ + u] = true;
    const bool hit = edge_[u * n_ + v];
    if (hit) {
      if (known_[u].empty() && known_[v].empty()) {
        order_.push_back(u);
        order_.push_back(v);
      } else if (known_[u].empty()) {
        order_.push_back(u);
      } else if (known_[v].empty()) {
        order_.push_back(v);
      }
      known_[u].push_back(v);
      known_[v].push_back(u);
    }
    curve_.push_back(static_cast<std::uint32_t>(found() + (hit ? 1 : 0)));
    return hit;
  }

  std::optional<std::pair<NodeId, NodeId>> draw() {
    const std::uint64_t done = curve_.size();
    if (done >= pairs()) return std::nullopt;
    if (2 * done < pairs()) {
      std::uniform_int_distribution<NodeId> a(0, n_ - 1);
      std::uniform_int_distribution<NodeId> b(0, n_ - 2);
      for (;;) {
        const NodeId u = a(rng_);
        NodeId v = b(rng_);
        if (v >= u) ++v;
        if (!was_tested(u, v)) return std::pair{u, v};
      }
    }
    std::vector<std::pair<NodeId, NodeId>> open;
    for (NodeId u = 0; u < n_; ++u)
      for (NodeId v = u + 1; v < n_; ++v)
        if (!was_tested(u, v)) open.emplace_back(u, v);
    std::uniform_int_distribution<std::uint64_t> pick(0, open.size() - 1);
    return open[pick(rng_)];
  }

  void random_phase(std::uint64_t k) {
    while (found() < k) {
      const auto p = draw();
      if (!p) return;
      test(p->first, p->second);
    }
  }

  void v_random_phase(std::uint64_t k) {
    while (found() < k) {
      const auto p = draw();
      if (!p) return;
      const auto [u, v] = *p;
      if (!test(u, v)) continue;
      const std::vector<NodeId> nu = known_[u];
      for (NodeId w : nu)
        if (w != v && !was_tested(v, w)) test(v, w);
      const std::vector<NodeId> nv = known_[v];
      for (NodeId w : nv)
        if (w != u && !was_tested(u, w)) test(u, w);
    }
  }

  void boot(std::uint64_t k, Bootstrap b) {
    if (b == Bootstrap::random) random_phase(k); else v_random_phase(k);
  }

  void sweep(NodeId u, std::vector<NodeId>* newly_seen) {
    for (NodeId v = 0; v < n_; ++v) {
      if (v == u || was_tested(u, v)) continue;
      const bool first = known_[v].empty();
      if (test(u, v) && first && newly_seen) newly_seen->push_back(v);
    }
  }

  void complete_simple_phase() {
    std::vector<NodeId> nodes = order_;
    std::vector<std::size_t> snap(n_);
    for (NodeId v : nodes) snap[v] = dprime(v);
    std::stable_sort(nodes.begin(), nodes.end(), [&](NodeId a, NodeId b) {
      return snap[a] != snap[b] ? snap[a] > snap[b] : a < b;
    });
    for (NodeId u : nodes) sweep(u, nullptr);
  }

  void complete_phase() {
    std::vector<NodeId> x = order_;
    while (!x.empty()) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < x.size(); ++i) {
        if (dprime(x[i]) > dprime(x[best]) || (dprime(x[i]) == dprime(x[best]) && x[i] < x[best])) best = i;
      }
      const NodeId u = x[best];
      x.erase(x.begin() + static_cast<std::ptrdiff_t>(best));
      std::vector<NodeId> seen;
      sweep(u, &seen);
      x.insert(x.end(), seen.begin(), seen.end());
    }
  }

  void tbf_phase() {
    std::vector<NodeId> nodes = order_;
    std::vector<std::size_t> snap(n_);
    for (NodeId v : nodes) snap[v] = dprime(v);
    std::vector<std::pair<NodeId, NodeId>> todo;
    for (NodeId a : nodes)
      for (NodeId b : nodes)
        if (a < b) todo.emplace_back(a, b);
    std::sort(todo.begin(), todo.end(), [&](const auto& p, const auto& q) {
      const auto sp = snap[p.first] + snap[p.second];
      const auto sq = snap[q.first] + snap[q.second];
      if (sp != sq) return sp > sq;
      return p < q;
    });
    for (const auto& [a, b] : todo)
      if (!was_tested(a, b)) test(a, b);
  }

  NodeId n_;
  std::uint64_t budget_;
  std::mt19937_64 rng_;
  std::vector<bool> edge_;
  std::vector<bool> tested_;
  std::vector<std::vector<NodeId>> known_;
  std::vector<NodeId> order_;
  std::vector<std::uint32_t> curve_;
};

}  // namespace linkq::testing
