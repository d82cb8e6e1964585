#include "linkq/bias.hpp"

#include <vector>

namespace linkq {

namespace {

std::optional<double> ratio(double sample, double reference) {
  if (reference == 0.0) return std::nullopt;
  return sample / reference;
}

}  // namespace

Graph observed_graph(const MeasurementState& state) {
  const auto& nodes = state.observed_nodes();
  std::vector<NodeId> local(state.node_count(), 0);
  for (std::size_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = static_cast<NodeId>(i);
  std::vector<Edge> edges;
  for (const Edge& e : state.discovered_links()) edges.push_back({local[e.u], local[e.v]});
  return Graph::from_edges(nodes.size(), edges);
}

SampleStats sample_stats_of(const Graph& observed) {
  const GraphStats s = graph_stats(observed);
  return {s.edge_count, s.node_count, s.density, s.avg_degree, s.max_degree, s.clustering, s.transitivity};
}

SampleStats sample_stats(const MeasurementState& state) { return sample_stats_of(observed_graph(state)); }

BiasReport bias_report(const GraphStats& reference, const SampleStats& sample) {
  BiasReport r{reference, sample, {}};
  r.ratios.m_prime = ratio(static_cast<double>(sample.m_prime), static_cast<double>(reference.edge_count));
  r.ratios.n_prime = ratio(static_cast<double>(sample.n_prime), static_cast<double>(reference.node_count));
  r.ratios.density = ratio(sample.density, reference.density);
  r.ratios.avg_degree = ratio(sample.avg_degree, reference.avg_degree);
  r.ratios.max_degree = ratio(static_cast<double>(sample.max_degree), static_cast<double>(reference.max_degree));
  r.ratios.clustering = ratio(sample.clustering, reference.clustering);
  r.ratios.transitivity = ratio(sample.transitivity, reference.transitivity);
  return r;
}

BiasReport bias_report(const Graph& g, const MeasurementState& state) {
  return bias_report(graph_stats(g), sample_stats(state));
}

}  // namespace linkq
