#include <optional>
#include <random>

#include "doctest.h"
#include "linkq/generators.hpp"
#include "linkq/graph_stats.hpp"
#include "linkq/metrics.hpp"
#include "linkq/strategies.hpp"
#include "support/oracles.hpp"

using namespace linkq;

namespace {

MeasurementTrace trace_of(std::vector<std::uint32_t> curve) {
  MeasurementTrace t;
  t.queries_performed = curve.size();
  t.cumulative = std::move(curve);
  return t;
}

// Explicit worst/best curves, summed term by term.
std::uint64_t brute_min(std::uint64_t n, std::uint64_t m, std::uint64_t q) {
  const std::uint64_t negatives = n * (n - 1) / 2 - m;
  std::uint64_t found = 0, total = 0;
  for (std::uint64_t i = 1; i <= q; ++i) {
    if (i > negatives) ++found;
    total += found;
  }
  return total;
}

std::uint64_t brute_max(std::uint64_t m, std::uint64_t q) {
  std::uint64_t found = 0, total = 0;
  for (std::uint64_t i = 1; i <= q; ++i) {
    if (found < m) ++found;
    total += found;
  }
  return total;
}

}  // namespace

TEST_CASE("efficiency sums the curve") {
  CHECK(efficiency(trace_of({1, 2, 3}), 3) == 6);
  CHECK(efficiency(trace_of({0, 0, 0, 0}), 4) == 0);
  CHECK(efficiency(trace_of({0, 1, 1, 2}), 4) == 4);
  CHECK(efficiency(trace_of({0, 1, 1, 2}), 0) == 0);
  CHECK_THROWS_AS(efficiency(trace_of({1}), 2), MetricsError);
}

TEST_CASE("min and max baselines") {
  // n=4, m=2: worst curve (0,0,0,0,1,2), best curve (1,2,2,2,2,2).
  CHECK(brute_min(4, 2, 6) == 3);
  CHECK(efficiency_min(4, 2, 6) == 3);
  CHECK(efficiency_min(4, 2, 4) == 0);
  CHECK(efficiency_min(3, 3, 3) == 6);
  CHECK(efficiency_max(3, 3) == 6);
  CHECK(brute_max(2, 6) == 11);
  CHECK(efficiency_max(2, 6) == 11);
  CHECK(efficiency_max(5, 4) == 10);
  CHECK(efficiency_max(0, 100) == 0);
  CHECK_THROWS_AS(efficiency_min(4, 2, 7), MetricsError);
  CHECK_THROWS_AS(efficiency_min(4, 7, 1), MetricsError);
  CHECK_THROWS_AS(efficiency_max(std::uint64_t{1} << 40, std::uint64_t{1} << 40), MetricsError);
}

TEST_CASE("closed forms match brute-force curves for small n") {
  for (std::uint64_t n = 1; n <= 12; ++n) {
    const std::uint64_t pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m <= pairs; ++m)
      for (std::uint64_t q = 0; q <= pairs; ++q) {
        REQUIRE(efficiency_min(n, m, q) == brute_min(n, m, q));
        REQUIRE(efficiency_max(m, q) == brute_max(m, q));
      }
  }
}

TEST_CASE("random baseline") {
  CHECK(efficiency_random_expected(0.5, 2) == doctest::Approx(1.5));
  CHECK(efficiency_random_expected(0.0, 100) == 0.0);
  CHECK(efficiency_random_expected(1.0, 3) == doctest::Approx(static_cast<double>(efficiency_max(3, 3))));
  CHECK_THROWS_AS(efficiency_random_expected(1.5, 3), MetricsError);
}

TEST_CASE("normalized efficiency") {
  CHECK(normalized_efficiency(11, 4, 2, 6) == doctest::Approx(1.0));
  CHECK(normalized_efficiency(3, 4, 2, 6) == doctest::Approx(0.0));
  CHECK(normalized_efficiency(7, 4, 2, 6) == doctest::Approx(0.5));
  CHECK_THROWS_WITH_AS(normalized_efficiency(0, 4, 0, 6), doctest::Contains("undefined normalization"), MetricsError);
  CHECK_THROWS_AS(normalized_efficiency(6, 3, 3, 3), MetricsError);
  CHECK_THROWS_AS(normalized_efficiency(12, 4, 2, 6), MetricsError);
  // Strictly increasing in E.
  double prev = -1;
  for (int e = 3; e <= 11; ++e) {
    const double v = normalized_efficiency(e, 4, 2, 6);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("relative efficiency") {
  // n=4, m=2, q=6, δ=1/3: normalised random = (7-3)/8 = 0.5.
  CHECK(relative_efficiency(0.5, 1.0 / 3.0, 4, 2, 6) == doctest::Approx(1.0));
  CHECK(relative_efficiency(0.0, 1.0 / 3.0, 4, 2, 6) == 0.0);
  CHECK_THROWS_AS(relative_efficiency(0.5, 0.0, 4, 2, 3), MetricsError);
}

TEST_CASE("build_report") {
  const Graph g = Graph::from_edges(4, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto r = build_report(trace_of({1, 1, 1, 1, 2, 2}), g, 6);
  CHECK(r.efficiency == 8);
  CHECK(r.normalized == doctest::Approx(0.625));
  CHECK(r.m_prime_final == 2);
  CHECK(r.pct_links_found == doctest::Approx(1.0));
  CHECK(r.pct_pairs_tested == doctest::Approx(1.0));
  CHECK(r.relative == doctest::Approx(0.625 / 0.5));

  CHECK(build_report(trace_of({1, 2, 2, 2, 2, 2}), g, 6).normalized == doctest::Approx(1.0));
  CHECK(build_report(trace_of({0, 0, 0, 0}), g, 4).normalized == 0.0);

  // Early stop: tested fraction counts performed queries, not padding.
  auto padded = trace_of({1, 2});
  padded.cumulative.resize(6, 2);
  CHECK(build_report(padded, g, 6).pct_pairs_tested == doctest::Approx(2.0 / 6.0));
}

TEST_CASE("oracle-generated traces stay between the min and max curves") {
  // Every labelled graph on 6 nodes.
  const std::uint64_t pairs = 15;
  Rng seeds(31);
  for (std::uint64_t mask = 0; mask < (1u << pairs); ++mask) {
    const Graph g = linkq::testing::graph_from_mask(6, mask);
    for (std::string_view name : {"random", "v-random", "c:2", "tbfc:1", "v-cs:1"}) {
      StrategySpec s = parse_strategy(name);
      s.budget = pairs;
      s.seed = seeds();
      const auto t = run_strategy(g, s);
      for (std::uint64_t q = 0; q <= t.queries_performed; ++q) {
        const auto e = efficiency(t, q);
        REQUIRE(e >= efficiency_min(6, g.edge_count(), q));
        REQUIRE(e <= efficiency_max(g.edge_count(), q));
      }
    }
  }
}

TEST_CASE("padding after an early stop can fall below the worst curve") {
  // complete never leaves the first component; starting on the lone edge it
  // misses the K4 while the worst curve counts every link by q = P.
  const Graph g = Graph::from_edges(
      6, std::vector<Edge>{{0, 1}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}});
  std::optional<MeasurementTrace> low;
  for (std::uint64_t seed = 0; seed < 200 && !low; ++seed) {
    StrategySpec s = parse_strategy("c:1");
    s.budget = 15;
    s.seed = seed;
    auto t = run_strategy(g, s);
    if (t.cumulative.back() == 1) low = t;
  }
  REQUIRE(low.has_value());
  CHECK(low->queries_performed < 15);
  CHECK(efficiency(*low, 15) < efficiency_min(6, 7, 15));
  CHECK_THROWS_AS(build_report(*low, g, 15), MetricsError);
}

TEST_CASE("random strategy efficiency tracks the constant-density model") {
  const Graph g = erdos_renyi(100, 0.05, 3);
  const std::uint64_t q = pair_count(100) / 10;
  double sum = 0;
  constexpr int kRuns = 300;
  for (int seed = 0; seed < kRuns; ++seed) {
    StrategySpec s;
    s.budget = q;
    s.seed = static_cast<std::uint64_t>(seed);
    sum += static_cast<double>(efficiency(run_strategy(g, s), q));
  }
  CHECK(sum / kRuns == doctest::Approx(efficiency_random_expected(density(g), q)).epsilon(0.05));
}
