#pragma once

// Efficiency of a discovery curve and its analytic baselines. Sums are exact
// 64-bit integers; floating point only enters at the ratios.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "linkq/graph.hpp"
#include "linkq/oracle.hpp"

namespace linkq {

class MetricsError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct EfficiencyReport {
  std::uint64_t q = 0;
  std::uint64_t m_prime_final = 0;
  double pct_pairs_tested = 0.0;  // fraction of all pairs, in [0, 1]
  double pct_links_found = 0.0;   // m'/m, in [0, 1]
  std::uint64_t efficiency = 0;
  double normalized = 0.0;
  double relative = 0.0;
};

/// Σ_{i=1..q} m'(i). Throws MetricsError when q exceeds the trace.
std::uint64_t efficiency(const MeasurementTrace& trace, std::uint64_t q);

/// Efficiency of the worst strategy: all P-m negative pairs first.
std::uint64_t efficiency_min(std::uint64_t n, std::uint64_t m, std::uint64_t q);

/// Efficiency of the best strategy: all m positive pairs first.
std::uint64_t efficiency_max(std::uint64_t m, std::uint64_t q);

/// Expected efficiency of random querying when every query succeeds with
/// probability delta: q(q+1)/2 · delta.
double efficiency_random_expected(double delta, std::uint64_t q);

/// (E - E_min) / (E_max - E_min). Throws MetricsError when the denominator
/// is zero or E lies outside [E_min, E_max] by more than rounding.
double normalized_efficiency(double e, std::uint64_t n, std::uint64_t m, std::uint64_t q);

/// Normalised efficiency divided by the normalised random baseline.
double relative_efficiency(double normalized, double delta, std::uint64_t n, std::uint64_t m, std::uint64_t q);

EfficiencyReport build_report(const MeasurementTrace& trace, const Graph& g, std::uint64_t q);

}  // namespace linkq
