#include "linkq/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>

#include "linkq/graph_stats.hpp"
#include "linkq/kernels.hpp"

namespace linkq {

namespace {

__extension__ using Wide = unsigned __int128;

std::uint64_t narrow(Wide value, const char* what) {
  if (value > std::numeric_limits<std::uint64_t>::max()) {
    throw MetricsError(std::string(what) + " overflows 64 bits");
  }
  return static_cast<std::uint64_t>(value);
}

Wide triangular(Wide t) { return t * (t + 1) / 2; }

}  // namespace

std::uint64_t efficiency(const MeasurementTrace& trace, std::uint64_t q) {
  if (q > trace.cumulative.size()) {
    throw MetricsError("q = " + std::to_string(q) + " exceeds trace length " +
                       std::to_string(trace.cumulative.size()));
  }
  return kernels::sum_u32(std::span(trace.cumulative).first(q));
}

std::uint64_t efficiency_min(std::uint64_t n, std::uint64_t m, std::uint64_t q) {
  const std::uint64_t pairs = pair_count(n);
  if (m > pairs) throw MetricsError("m exceeds the number of node pairs");
  if (q > pairs) throw MetricsError("q exceeds the number of node pairs");
  const std::uint64_t negatives = pairs - m;
  if (q <= negatives) return 0;
  return narrow(triangular(q - negatives), "efficiency_min");
}

std::uint64_t efficiency_max(std::uint64_t m, std::uint64_t q) {
  if (q <= m) return narrow(triangular(q), "efficiency_max");
  return narrow(triangular(m) + Wide{q - m} * m, "efficiency_max");
}

double efficiency_random_expected(double delta, std::uint64_t q) {
  if (!(delta >= 0.0 && delta <= 1.0)) throw MetricsError("density must lie in [0, 1]");
  return static_cast<double>(triangular(q)) * delta;
}

double normalized_efficiency(double e, std::uint64_t n, std::uint64_t m, std::uint64_t q) {
  const std::uint64_t lo = efficiency_min(n, m, q);
  const std::uint64_t hi = efficiency_max(m, q);
  if (hi <= lo) throw MetricsError("undefined normalization (E_max == E_min)");
  const double value = (e - static_cast<double>(lo)) / static_cast<double>(hi - lo);
  constexpr double kSlack = 1e-9;
  if (value < -kSlack || value > 1.0 + kSlack) {
    throw MetricsError("efficiency " + std::to_string(e) + " outside [E_min, E_max]");
  }
  return std::clamp(value, 0.0, 1.0);
}

double relative_efficiency(double normalized, double delta, std::uint64_t n, std::uint64_t m, std::uint64_t q) {
  const std::uint64_t lo = efficiency_min(n, m, q);
  const std::uint64_t hi = efficiency_max(m, q);
  if (hi <= lo) throw MetricsError("undefined normalization (E_max == E_min)");
  const double random_norm =
      (efficiency_random_expected(delta, q) - static_cast<double>(lo)) / static_cast<double>(hi - lo);
  if (!(random_norm > 0.0)) throw MetricsError("random baseline has zero normalized efficiency");
  return normalized / random_norm;
}

EfficiencyReport build_report(const MeasurementTrace& trace, const Graph& g, std::uint64_t q) {
  const std::uint64_t n = g.node_count();
  const std::uint64_t m = g.edge_count();
  const std::uint64_t pairs = pair_count(n);
  EfficiencyReport r;
  r.q = q;
  r.efficiency = efficiency(trace, q);
  r.m_prime_final = q == 0 ? 0 : trace.cumulative[q - 1];
  const std::uint64_t tested = std::min<std::uint64_t>(q, trace.queries_performed);
  r.pct_pairs_tested = pairs == 0 ? 0.0 : static_cast<double>(tested) / static_cast<double>(pairs);
  r.pct_links_found = m == 0 ? 0.0 : static_cast<double>(r.m_prime_final) / static_cast<double>(m);
  r.normalized = normalized_efficiency(static_cast<double>(r.efficiency), n, m, q);
  r.relative = relative_efficiency(r.normalized, density(g), n, m, q);
  return r;
}

}  // namespace linkq
