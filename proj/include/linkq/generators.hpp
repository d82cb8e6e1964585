#pragma once

// Synthetic ground-truth graphs. All generators are deterministic per seed.

#include <cstdint>
#include <string>
#include <string_view>

#include "linkq/graph.hpp"

namespace linkq {

enum class GeneratorKind { erdos_renyi, preferential_attachment, small_world };

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::erdos_renyi;
  std::uint32_t n = 0;
  double p = 0.0;            // erdos_renyi
  std::uint32_t m0 = 1;      // preferential_attachment
  std::uint32_t ring_k = 2;  // small_world, even
  double beta = 0.0;         // small_world
  std::uint64_t seed = 0;

  /// Round-trips through parse_generator, e.g. "pa:5000,3".
  std::string to_string() const;
};

/// Parses "er:n,p", "pa:n,m0" or "sw:n,k,beta" (long forms erdos_renyi,
/// preferential_attachment, small_world also accepted). Throws
/// std::invalid_argument on malformed text or out-of-range parameters.
GeneratorSpec parse_generator(std::string_view text, std::uint64_t seed = 0);

void validate(const GeneratorSpec& spec);

/// G(n, p): each pair independently with probability p.
Graph erdos_renyi(std::uint32_t n, double p, std::uint64_t seed);

/// Growth from a complete seed clique on nodes 0..m0; each later node links
/// to m0 distinct earlier nodes chosen proportionally to degree.
/// Edge count: (m0+1)m0/2 + m0(n-m0-1).
Graph preferential_attachment(std::uint32_t n, std::uint32_t m0, std::uint64_t seed);

/// Watts-Strogatz: ring lattice of degree k, then each lattice edge (i, i+j)
/// has its far end rewired with probability beta. Edge count is nk/2.
Graph small_world(std::uint32_t n, std::uint32_t k, double beta, std::uint64_t seed);

Graph generate(const GeneratorSpec& spec);

}  // namespace linkq
