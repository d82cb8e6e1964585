#pragma once

// Link-query measurement strategies. Every strategy mutates a
// MeasurementState and stops cleanly when the budget runs out or every pair
// has been tested.

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "linkq/graph.hpp"
#include "linkq/oracle.hpp"

namespace linkq {

enum class StrategyKind { random, v_random, complete_simple, complete, tbf, tbf_complete };

/// Phase-1 strategy used before the main phase.
enum class Bootstrap { random, v_random };

/// k value meaning "never stop on link count".
inline constexpr std::uint64_t kUnboundedK = std::numeric_limits<std::uint64_t>::max();

struct StrategySpec {
  StrategyKind kind = StrategyKind::random;
  std::uint64_t k = kUnboundedK;
  Bootstrap bootstrap = Bootstrap::random;  // ignored by random and v_random
  std::uint64_t budget = 1;
  std::uint64_t seed = 0;
  bool tbf_dynamic_order = false;  // re-rank the between-found pairs by live d'
  bool record_events = false;

  /// CLI name, e.g. "v-tbfc".
  std::string name() const;
  /// "name:k", or just the name when k is unbounded.
  std::string label() const;
};

class StrategyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "random", "v-c:100", "tbfc:1000", ... into kind/bootstrap/k.
/// Budget, seed and flags keep their defaults.
StrategySpec parse_strategy(std::string_view text);

void validate(const StrategySpec& spec);

// Phase-level building blocks; usable on a state that already holds links.

void strat_random(MeasurementState& state, std::uint64_t k, Rng& rng);

/// Random queries; after every positive random query (u, v), v is tested
/// against N'(u) and u against N'(v). Closure hits do not trigger closure.
void strat_v_random(MeasurementState& state, std::uint64_t k, Rng& rng);

void run_bootstrap(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng);

/// Sweeps a frozen snapshot of V' in decreasing d' (ties: ascending id).
void strat_complete_simple(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng);

/// Sweep phase with a live frontier X initialised to the current V'.
void complete_phase(MeasurementState& state);
void strat_complete(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng);

/// Tests pairs inside a frozen V' snapshot by decreasing d'(u)+d'(v). With
/// dynamic_order the ranking uses the live d' instead of the snapshot.
void between_found_phase(MeasurementState& state, bool dynamic_order = false);
void strat_tbf(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng,
               bool dynamic_order = false);
void strat_tbf_complete(MeasurementState& state, std::uint64_t k, Bootstrap bootstrap, Rng& rng,
                        bool dynamic_order = false);

/// Runs one strategy from scratch. The returned trace is padded with its
/// final value up to spec.budget entries.
MeasurementTrace run_strategy(const Graph& g, const StrategySpec& spec);

/// As run_strategy, but also hands back the finished state.
MeasurementState run_strategy_state(const Graph& g, const StrategySpec& spec);

void pad_trace(MeasurementTrace& trace, std::uint64_t budget);

}  // namespace linkq
