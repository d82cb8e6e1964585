#include "linkq/strategies.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <tuple>
#include <vector>

namespace linkq {

namespace {

struct NameEntry {
  std::string_view name;
  StrategyKind kind;
  Bootstrap bootstrap;
};

constexpr NameEntry kNames[] = {
    {"random", StrategyKind::random, Bootstrap::random},
    {"v-random", StrategyKind::v_random, Bootstrap::random},
    {"cs", StrategyKind::complete_simple, Bootstrap::random},
    {"v-cs", StrategyKind::complete_simple, Bootstrap::v_random},
    {"c", StrategyKind::complete, Bootstrap::random},
    {"v-c", StrategyKind::complete, Bootstrap::v_random},
    {"tbf", StrategyKind::tbf, Bootstrap::random},
    {"v-tbf", StrategyKind::tbf, Bootstrap::v_random},
    {"tbfc", StrategyKind::tbf_complete, Bootstrap::random},
    {"v-tbfc", StrategyKind::tbf_complete, Bootstrap::v_random},
};

bool has_phase_one(StrategyKind kind) { return kind != StrategyKind::random && kind != StrategyKind::v_random; }

// Tests u against every other node in ascending id order. Returns false once
// the budget is gone.
template <typename OnHit>
bool sweep(MeasurementState& state, NodeId u, OnHit&& on_hit) {
  const auto n = static_cast<NodeId>(state.node_count());
  for (NodeId v = 0; v < n; ++v) {
    if (v == u || state.is_tested(u, v)) continue;
    if (!state.has_budget()) return false;
    const bool was_observed = state.is_observed(v);
    if (state.query(u, v, Phase::sweep)) on_hit(v, was_observed);
  }
  return true;
}

// Closure tests for a positive random query: `pivot` against N'(hub).
bool close_wedges(MeasurementState& state, NodeId hub, NodeId pivot) {
  const auto span = state.observed_neighbors(hub);
  const std::vector<NodeId> snapshot(span.begin(), span.end());
  for (NodeId w : snapshot) {
    if (w == pivot || state.is_tested(pivot, w)) continue;
    if (!state.has_budget()) return false;
    state.query(pivot, w, Phase::closure);
  }
  return true;
}

}  // namespace

std::string StrategySpec::name() const {
  for (const auto& e : kNames) {
    if (e.kind != kind) continue;
    if (!has_phase_one(kind) || e.bootstrap == bootstrap) return std::string(e.name);
  }
  return "unknown";
}

std::string StrategySpec::label() const {
  if (k == kUnboundedK) return name();
  return name() + ":" + std::to_string(k);
}

StrategySpec parse_strategy(std::string_view text) {
  StrategySpec spec;
  std::string_view name = text;
  if (const auto colon = text.find(':'); colon != std::string_view::npos) {
    name = text.substr(0, colon);
    const std::string_view k_text = text.substr(colon + 1);
    std::uint64_t k = 0;
    const auto [ptr, ec] = std::from_chars(k_text.data(), k_text.data() + k_text.size(), k);
    if (ec != std::errc{} || ptr != k_text.data() + k_text.size() || k_text.empty()) {
      throw StrategyError("invalid k in strategy '" + std::string(text) + "'");
    }
    spec.k = k;
  }
  for (const auto& e : kNames) {
    if (e.name == name) {
      spec.kind = e.kind;
      spec.bootstrap = e.bootstrap;
      return spec;
    }
  }
  throw StrategyError("unknown strategy '" + std::string(name) +
                      "' (expected random, v-random, cs, v-cs, c, v-c, tbf, v-tbf, tbfc, v-tbfc)");
}

void validate(const StrategySpec& spec) {
  if (spec.budget < 1) throw StrategyError("budget must be at least 1");
}

void strat_random(MeasurementState& state, std::uint64_t k, Rng& rng) {
  while (state.links_found() < k) {
    if (!state.has_budget()) return;
    const auto pair = state.random_untested_pair(rng);
    if (!pair) return;
    state.query(pair->first, pair->second, Phase::random);
  }
}

void strat_v_random(MeasurementState& state, std::uint64_t k, Rng& rng) {
  while (state.links_found() < k) {
    if (!state.has_budget()) return;
    const auto pair = state.random_untested_pair(rng);
    if (!pair) return;
    const auto [u, v] = *pair;
    if (!state.query(u, v, Phase::random)) continue;
    if (!close_wedges(state, u, v)) return;
    if (!close_wedges(state, v, u)) return;
  }
}

void run_bootstrap(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng) {
  if (bootstrap == Bootstrap::v_random) {
    strat_v_random(state, k, rng);
  } else {
    strat_random(state, k, rng);
  }
}

void strat_complete_simple(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng) {
  run_bootstrap(state, k, bootstrap, rng);
  std::vector<std::pair<std::size_t, NodeId>> order;
  for (NodeId u : state.observed_nodes()) order.emplace_back(state.observed_degree(u), u);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (const auto& [deg, u] : order) {
    if (!sweep(state, u, [](NodeId, bool) {})) return;
  }
}

void complete_phase(MeasurementState& state) {
  // Ordered by (-d', id) so begin() is the max-degree node with smallest id.
  using Key = std::pair<std::int64_t, NodeId>;
  std::set<Key> frontier;
  std::vector<bool> in_frontier(state.node_count(), false);
  auto key_of = [&](NodeId v) { return Key{-static_cast<std::int64_t>(state.observed_degree(v)), v}; };
  for (NodeId v : state.observed_nodes()) {
    frontier.insert(key_of(v));
    in_frontier[v] = true;
  }
  while (!frontier.empty()) {
    const NodeId u = frontier.begin()->second;
    frontier.erase(frontier.begin());
    in_frontier[u] = false;
    const bool budget_left = sweep(state, u, [&](NodeId v, bool was_observed) {
      if (in_frontier[v]) {
        // d'(v) just grew by one; re-key from its previous value.
        frontier.erase(Key{-static_cast<std::int64_t>(state.observed_degree(v) - 1), v});
        frontier.insert(key_of(v));
      } else if (!was_observed) {
        frontier.insert(key_of(v));
        in_frontier[v] = true;
      }
    });
    if (!budget_left) return;
  }
}

void strat_complete(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng) {
  run_bootstrap(state, k, bootstrap, rng);
  complete_phase(state);
}

void between_found_phase(MeasurementState& state, bool dynamic_order) {
  std::vector<NodeId> nodes = state.observed_nodes();
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::size_t> degree(state.node_count(), 0);
  for (NodeId v : nodes) degree[v] = state.observed_degree(v);

  if (!dynamic_order) {
    struct Candidate {
      std::size_t sum;
      NodeId a;
      NodeId b;
    };
    std::vector<Candidate> pairs;
    pairs.reserve(nodes.size() * (nodes.size() - (nodes.empty() ? 0 : 1)) / 2);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      for (std::size_t j = i + 1; j < nodes.size(); ++j) {
        pairs.push_back({degree[nodes[i]] + degree[nodes[j]], nodes[i], nodes[j]});
      }
    }
    std::sort(pairs.begin(), pairs.end(), [](const Candidate& x, const Candidate& y) {
      return std::tie(y.sum, x.a, x.b) < std::tie(x.sum, y.a, y.b);
    });
    for (const auto& c : pairs) {
      if (state.is_tested(c.a, c.b)) continue;
      if (!state.has_budget()) return;
      state.query(c.a, c.b, Phase::between_found);
    }
    return;
  }

  using Key = std::tuple<std::int64_t, NodeId, NodeId>;
  auto key_of = [&](NodeId a, NodeId b) {
    return Key{-static_cast<std::int64_t>(degree[a] + degree[b]), std::min(a, b), std::max(a, b)};
  };
  std::set<Key> pending;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (!state.is_tested(nodes[i], nodes[j])) pending.insert(key_of(nodes[i], nodes[j]));
    }
  }
  while (!pending.empty()) {
    if (!state.has_budget()) return;
    const auto [neg_sum, a, b] = *pending.begin();
    pending.erase(pending.begin());
    if (!state.query(a, b, Phase::between_found)) continue;
    std::vector<std::pair<NodeId, NodeId>> touched;
    for (NodeId end : {a, b}) {
      for (NodeId other : nodes) {
        if (other != end && pending.erase(key_of(end, other)) > 0) touched.emplace_back(end, other);
      }
    }
    ++degree[a];
    ++degree[b];
    for (const auto& [x, y] : touched) pending.insert(key_of(x, y));
  }
}

void strat_tbf(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng, bool dynamic_order) {
  run_bootstrap(state, k, bootstrap, rng);
  between_found_phase(state, dynamic_order);
}

void strat_tbf_complete(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng,
                        bool dynamic_order) {
  strat_tbf(state, k, bootstrap, rng, dynamic_order);
  complete_phase(state);
}

void pad_trace(MeasurementTrace& trace, std::uint64_t budget) {
  if (trace.cumulative.size() < budget) trace.cumulative.resize(budget, trace.final_links());
}

MeasurementState run_strategy_state(const Graph& g, const StrategySpec& spec) {
  validate(spec);
  MeasurementState state(g, spec.budget, spec.record_events);
  Rng rng(spec.seed);
  switch (spec.kind) {
    case StrategyKind::random:
      strat_random(state, spec.k, rng);
      break;
    case StrategyKind::v_random:
      strat_v_random(state, spec.k, rng);
      break;
    case StrategyKind::complete_simple:
      strat_complete_simple(state, spec.k, spec.bootstrap, rng);
      break;
    case StrategyKind::complete:
      strat_complete(state, spec.k, spec.bootstrap, rng);
      break;
    case StrategyKind::tbf:
      strat_tbf(state, spec.k, spec.bootstrap, rng, spec.tbf_dynamic_order);
      break;
    case StrategyKind::tbf_complete:
      strat_tbf_complete(state, spec.k, spec.bootstrap, rng, spec.tbf_dynamic_order);
      break;
  }
  return state;
}

MeasurementTrace run_strategy(const Graph& g, const StrategySpec& spec) {
  MeasurementState state = run_strategy_state(g, spec);
  MeasurementTrace trace = state.take_trace();
  pad_trace(trace, spec.budget);
  return trace;
}

}  // namespace linkq
