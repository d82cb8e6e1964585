#include "linkq/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "linkq/oracle.hpp"

namespace linkq {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

template <typename T>
T parse_number(std::string_view text, std::string_view what) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string GeneratorSpec::to_string() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind) {
    case GeneratorKind::erdos_renyi:
      out << "er:" << n << ',' << p;
      break;
    case GeneratorKind::preferential_attachment:
      out << "pa:" << n << ',' << m0;
      break;
    case GeneratorKind::small_world:
      out << "sw:" << n << ',' << ring_k << ',' << beta;
      break;
  }
  return out.str();
}

GeneratorSpec parse_generator(std::string_view text, std::uint64_t seed) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("generator must look like kind:params, got '" + std::string(text) + "'");
  }
  const std::string_view kind = text.substr(0, colon);
  const auto params = split(text.substr(colon + 1), ',');
  GeneratorSpec spec;
  spec.seed = seed;
  auto expect = [&](std::size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("generator '" + std::string(kind) + "' takes " + std::to_string(count) +
                                  " parameters");
    }
  };
  if (kind == "er" || kind == "erdos_renyi") {
    expect(2);
    spec.kind = GeneratorKind::erdos_renyi;
    spec.n = parse_number<std::uint32_t>(params[0], "n");
    spec.p = parse_number<double>(params[1], "p");
  } else if (kind == "pa" || kind == "preferential_attachment") {
    expect(2);
    spec.kind = GeneratorKind::preferential_attachment;
    spec.n = parse_number<std::uint32_t>(params[0], "n");
    spec.m0 = parse_number<std::uint32_t>(params[1], "m0");
  } else if (kind == "sw" || kind == "small_world") {
    expect(3);
    spec.kind = GeneratorKind::small_world;
    spec.n = parse_number<std::uint32_t>(params[0], "n");
    spec.ring_k = parse_number<std::uint32_t>(params[1], "k");
    spec.beta = parse_number<double>(params[2], "beta");
  } else {
    throw std::invalid_argument("unknown generator '" + std::string(kind) + "' (expected er, pa, sw)");
  }
  validate(spec);
  return spec;
}

void validate(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator needs n >= 1");
  switch (spec.kind) {
    case GeneratorKind::erdos_renyi:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw std::invalid_argument("erdos_renyi needs 0 <= p <= 1");
      break;
    case GeneratorKind::preferential_attachment:
      if (spec.m0 < 1 || spec.m0 >= spec.n) throw std::invalid_argument("preferential_attachment needs 1 <= m0 < n");
      break;
    case GeneratorKind::small_world:
      if (spec.ring_k % 2 != 0 || spec.ring_k >= spec.n) {
        throw std::invalid_argument("small_world needs an even k < n");
      }
      if (!(spec.beta >= 0.0 && spec.beta <= 1.0)) throw std::invalid_argument("small_world needs 0 <= beta <= 1");
      break;
  }
}

Graph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed) {
  validate(GeneratorSpec{.kind = GeneratorKind::erdos_renyi, .n = std::max<std::uint32_t>(n, 1), .p = p});
  std::vector<Edge> edges;
  if (p >= 1.0) {
    for (NodeId u = 0; u < n; ++u)
      for (NodeId v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph::from_edges(n, edges);
  }
  if (p <= 0.0 || n < 2) return Graph::from_edges(n, edges);

  // Geometric skipping over the pairs (w < v) in row order.
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double log_q = std::log1p(-p);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < static_cast<std::int64_t>(n)) {
    const double r = unit(rng);
    w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
    while (w >= v && v < static_cast<std::int64_t>(n)) {
      w -= v;
      ++v;
    }
    if (v < static_cast<std::int64_t>(n)) edges.push_back({static_cast<NodeId>(w), static_cast<NodeId>(v)});
  }
  return Graph::from_edges(n, edges);
}

Graph preferential_attachment(std::uint32_t n, std::uint32_t m0, std::uint64_t seed) {
  validate(GeneratorSpec{.kind = GeneratorKind::preferential_attachment, .n = n, .m0 = m0});
  Rng rng(seed);
  std::vector<Edge> edges;
  std::vector<NodeId> endpoints;  // each node repeated once per incident link
  for (NodeId u = 0; u <= m0; ++u) {
    for (NodeId v = u + 1; v <= m0; ++v) {
      edges.push_back({u, v});
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  std::vector<NodeId> targets;
  for (NodeId t = m0 + 1; t < n; ++t) {
    targets.clear();
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    while (targets.size() < m0) {
      const NodeId candidate = endpoints[pick(rng)];
      if (std::find(targets.begin(), targets.end(), candidate) == targets.end()) targets.push_back(candidate);
    }
    for (NodeId target : targets) {
      edges.push_back({target, t});
      endpoints.push_back(target);
      endpoints.push_back(t);
    }
  }
  return Graph::from_edges(n, edges);
}

Graph small_world(std::uint32_t n, std::uint32_t k, double beta, std::uint64_t seed) {
  validate(GeneratorSpec{.kind = GeneratorKind::small_world, .n = n, .ring_k = k, .beta = beta});
  std::vector<std::set<NodeId>> adj(n);
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = 1; j <= k / 2; ++j) {
      const NodeId v = (i + j) % n;
      adj[i].insert(v);
      adj[v].insert(i);
    }
  }
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<NodeId> node(0, n - 1);
  for (NodeId j = 1; j <= k / 2; ++j) {
    for (NodeId i = 0; i < n; ++i) {
      if (unit(rng) >= beta) continue;
      if (adj[i].size() >= n - 1) continue;
      NodeId w = node(rng);
      while (w == i || adj[i].contains(w)) w = node(rng);
      const NodeId old = (i + j) % n;
      adj[i].erase(old);
      adj[old].erase(i);
      adj[i].insert(w);
      adj[w].insert(i);
    }
  }
  std::vector<Edge> edges;
  for (NodeId u = 0; u < n; ++u)
    for (NodeId v : adj[u])
      if (u < v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

Graph generate(const GeneratorSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case GeneratorKind::erdos_renyi:
      return erdos_renyi(spec.n, spec.p, spec.seed);
    case GeneratorKind::preferential_attachment:
      return preferential_attachment(spec.n, spec.m0, spec.seed);
    case GeneratorKind::small_world:
      return small_world(spec.n, spec.ring_k, spec.beta, spec.seed);
  }
  return {};
}

}  // namespace linkq
