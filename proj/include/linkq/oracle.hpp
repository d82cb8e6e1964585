#pragma once

// The measurer's view of a hidden graph: link queries under a budget and the
// sample they reveal.

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "linkq/graph.hpp"

namespace linkq {

using Rng = std::mt19937_64;

class QueryError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a query is attempted with no budget left. Strategies treat it
/// as a stop signal; they normally check has_budget() first.
class BudgetExhausted : public QueryError {
 public:
  BudgetExhausted() : QueryError("budget exhausted") {}
};

/// Which part of a strategy issued a query.
enum class Phase : std::uint8_t { random, closure, sweep, between_found };

struct QueryEvent {
  NodeId u;
  NodeId v;
  bool found;
  Phase phase;
};

/// Cumulative discovery curve: cumulative[i] is m' after query i+1.
struct MeasurementTrace {
  std::vector<std::uint32_t> cumulative;
  std::size_t queries_performed = 0;  // before any padding
  std::vector<QueryEvent> events;     // empty unless recording was requested

  std::uint32_t final_links() const { return cumulative.empty() ? 0 : cumulative.back(); }
};

/// Canonical key of an unordered pair.
constexpr std::uint64_t pair_key(NodeId u, NodeId v) {
  const NodeId lo = u < v ? u : v;
  const NodeId hi = u < v ? v : u;
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

constexpr std::pair<NodeId, NodeId> pair_from_key(std::uint64_t key) {
  return {static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu)};
}

class MeasurementState {
 public:
  MeasurementState(const Graph& hidden, std::uint64_t budget, bool record_events = false);

  /// Tests the pair against the hidden graph. Throws QueryError for u == v,
  /// an out-of-range id or an already tested pair, and BudgetExhausted when
  /// query_count() == budget().
  bool query(NodeId u, NodeId v, Phase phase = Phase::random);

  bool is_tested(NodeId u, NodeId v) const;

  /// Uniform draw over untested unordered pairs; nullopt when none remain.
  /// Rejection sampling while fewer than half the pairs are tested, then the
  /// r-th untested pair in (min, max) lexicographic order for uniform r.
  std::optional<std::pair<NodeId, NodeId>> random_untested_pair(Rng& rng);

  /// Discovered neighbours of v in discovery order; empty if unobserved.
  std::span<const NodeId> observed_neighbors(NodeId v) const;
  std::size_t observed_degree(NodeId v) const { return observed_neighbors(v).size(); }
  bool is_observed(NodeId v) const { return v < observed_.size() && observed_[v]; }

  /// V' in the order nodes were first observed.
  const std::vector<NodeId>& observed_nodes() const { return observed_order_; }

  /// E' in discovery order, each as (u, v) exactly as queried.
  std::vector<Edge> discovered_links() const;

  std::size_t node_count() const { return hidden_->node_count(); }
  std::uint64_t total_pairs() const { return pair_count(hidden_->node_count()); }
  std::uint64_t query_count() const { return query_count_; }
  std::uint64_t budget() const { return budget_; }
  bool has_budget() const { return query_count_ < budget_; }
  bool all_pairs_tested() const { return query_count_ >= total_pairs(); }
  std::uint64_t links_found() const { return links_found_; }
  const MeasurementTrace& trace() const { return trace_; }
  MeasurementTrace take_trace() { return std::move(trace_); }

 private:
  void sync_untested_index();

  const Graph* hidden_;
  std::uint64_t budget_;
  bool record_events_;
  std::uint64_t query_count_ = 0;
  std::uint64_t links_found_ = 0;
  std::unordered_set<std::uint64_t> tested_;
  std::vector<std::uint64_t> tested_log_;
  std::vector<std::vector<NodeId>> discovered_;
  std::vector<bool> observed_;
  std::vector<NodeId> observed_order_;
  std::vector<Edge> discovered_order_;
  MeasurementTrace trace_;

  // Dense-regime index: every pair untested at materialisation time, sorted,
  // with a Fenwick tree over the still-untested flags.
  bool dense_ = false;
  std::size_t synced_log_ = 0;
  std::vector<std::uint64_t> untested_keys_;
  std::vector<std::uint32_t> fenwick_;
};

}  // namespace linkq
