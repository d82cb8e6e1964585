#pragma once

// Statistics of the observed sample (V', E') against the hidden graph.

#include <cstddef>
#include <optional>

#include "linkq/graph.hpp"
#include "linkq/graph_stats.hpp"
#include "linkq/oracle.hpp"

namespace linkq {

/// Sample properties. density and avg_degree are taken over the observed
/// nodes V', not over all of V.
struct SampleStats {
  std::size_t m_prime = 0;
  std::size_t n_prime = 0;
  double density = 0.0;
  double avg_degree = 0.0;
  std::size_t max_degree = 0;
  double clustering = 0.0;
  double transitivity = 0.0;
};

/// sample / reference for each property; nullopt where the reference is 0.
struct BiasRatios {
  std::optional<double> m_prime;
  std::optional<double> n_prime;
  std::optional<double> density;
  std::optional<double> avg_degree;
  std::optional<double> max_degree;
  std::optional<double> clustering;
  std::optional<double> transitivity;
};

struct BiasReport {
  GraphStats reference;
  SampleStats sample;
  BiasRatios ratios;
};

/// The observed graph on V' (relabelled densely in first-observation order).
Graph observed_graph(const MeasurementState& state);

SampleStats sample_stats(const MeasurementState& state);
SampleStats sample_stats_of(const Graph& observed);

BiasReport bias_report(const Graph& g, const MeasurementState& state);
BiasReport bias_report(const GraphStats& reference, const SampleStats& sample);

}  // namespace linkq
