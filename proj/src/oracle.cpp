#include "linkq/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace linkq {

MeasurementState::MeasurementState(const Graph& hidden, std::uint64_t budget, bool record_events)
    : hidden_(&hidden),
      budget_(budget),
      record_events_(record_events),
      discovered_(hidden.node_count()),
      observed_(hidden.node_count(), false) {}

bool MeasurementState::query(NodeId u, NodeId v, Phase phase) {
  if (u == v) throw QueryError("query of a node with itself (" + std::to_string(u) + ")");
  hidden_->check_node(u);
  hidden_->check_node(v);
  if (!has_budget()) throw BudgetExhausted();
  const std::uint64_t key = pair_key(u, v);
  if (!tested_.insert(key).second) {
    throw QueryError("duplicate query (" + std::to_string(u) + ", " + std::to_string(v) + ")");
  }
  tested_log_.push_back(key);
  ++query_count_;

  const bool found = hidden_->has_edge(u, v);
  if (found) {
    ++links_found_;
    discovered_[u].push_back(v);
    discovered_[v].push_back(u);
    discovered_order_.push_back({u, v});
    for (NodeId x : {u, v}) {
      if (!observed_[x]) {
        observed_[x] = true;
        observed_order_.push_back(x);
      }
    }
  }
  trace_.cumulative.push_back(static_cast<std::uint32_t>(links_found_));
  trace_.queries_performed = query_count_;
  if (record_events_) trace_.events.push_back({u, v, found, phase});
  return found;
}

bool MeasurementState::is_tested(NodeId u, NodeId v) const {
  if (u == v) throw QueryError("pair of a node with itself (" + std::to_string(u) + ")");
  return tested_.contains(pair_key(u, v));
}

std::span<const NodeId> MeasurementState::observed_neighbors(NodeId v) const {
  if (v >= discovered_.size()) return {};
  return discovered_[v];
}

std::vector<Edge> MeasurementState::discovered_links() const { return discovered_order_; }

void MeasurementState::sync_untested_index() {
  const std::size_t size = untested_keys_.size();
  for (; synced_log_ < tested_log_.size(); ++synced_log_) {
    const auto it = std::lower_bound(untested_keys_.begin(), untested_keys_.end(), tested_log_[synced_log_]);
    if (it == untested_keys_.end() || *it != tested_log_[synced_log_]) continue;
    for (std::size_t i = static_cast<std::size_t>(it - untested_keys_.begin()) + 1; i <= size; i += i & (~i + 1)) {
      --fenwick_[i];
    }
  }
}

std::optional<std::pair<NodeId, NodeId>> MeasurementState::random_untested_pair(Rng& rng) {
  const std::uint64_t total = total_pairs();
  if (query_count_ >= total) return std::nullopt;
  const auto n = static_cast<NodeId>(node_count());

  if (!dense_ && 2 * query_count_ < total) {
    std::uniform_int_distribution<NodeId> first(0, n - 1);
    std::uniform_int_distribution<NodeId> second(0, n - 2);
    for (;;) {
      const NodeId u = first(rng);
      NodeId v = second(rng);
      if (v >= u) ++v;
      if (!tested_.contains(pair_key(u, v))) return std::pair{u, v};
    }
  }

  if (!dense_) {
    dense_ = true;
    untested_keys_.reserve(total - query_count_);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) {
        const std::uint64_t key = pair_key(u, v);
        if (!tested_.contains(key)) untested_keys_.push_back(key);
      }
    }
    const std::size_t size = untested_keys_.size();
    fenwick_.assign(size + 1, 0);
    for (std::size_t i = 1; i <= size; ++i) {
      ++fenwick_[i];
      const std::size_t parent = i + (i & (~i + 1));
      if (parent <= size) fenwick_[parent] += fenwick_[i];
    }
    synced_log_ = tested_log_.size();
  }
  sync_untested_index();

  const std::uint64_t remaining = total - query_count_;
  std::uniform_int_distribution<std::uint64_t> pick(0, remaining - 1);
  std::uint64_t rank = pick(rng);
  // Fenwick descent to the (rank+1)-th set position.
  std::size_t pos = 0;
  for (std::size_t step = std::bit_floor(untested_keys_.size()); step > 0; step >>= 1) {
    const std::size_t next = pos + step;
    if (next < fenwick_.size() && fenwick_[next] <= rank) {
      pos = next;
      rank -= fenwick_[next];
    }
  }
  return pair_from_key(untested_keys_[pos]);
}

}  // namespace linkq
