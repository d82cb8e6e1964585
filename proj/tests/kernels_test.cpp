#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "linkq/graph_stats.hpp"
#include "linkq/kernels.hpp"
#include "support/oracles.hpp"

using namespace linkq;

namespace {

std::vector<std::uint32_t> sorted_sample(std::mt19937_64& rng, std::size_t size, std::uint32_t universe) {
  std::uniform_int_distribution<std::uint32_t> pick(0, universe - 1);
  std::set<std::uint32_t> s;
  while (s.size() < size) s.insert(pick(rng));
  return {s.begin(), s.end()};
}

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::set_active_isa(saved); }
};

}  // namespace

TEST_CASE("scalar intersection counts common elements") {
  const std::vector<std::uint32_t> a{1, 3, 5, 7, 9};
  const std::vector<std::uint32_t> b{2, 3, 4, 9, 10};
  CHECK(kernels::scalar::count_common(a, b) == 2);
  CHECK(kernels::scalar::count_common(a, {}) == 0);
  CHECK(kernels::scalar::sum_u32(a) == 25);
}

#if defined(LINKQ_HAVE_AVX2_KERNELS)
TEST_CASE("avx2 kernels match scalar on random inputs") {
  if (!kernels::isa_supported(kernels::Isa::avx2)) {
    MESSAGE("AVX2 not available; skipping");
    return;
  }
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> len(0, 70);
  std::uniform_int_distribution<std::uint32_t> universe(8, 200);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::uint32_t u = universe(rng);
    const auto a = sorted_sample(rng, std::min<std::size_t>(len(rng), u), u);
    const auto b = sorted_sample(rng, std::min<std::size_t>(len(rng), u), u);
    REQUIRE(kernels::avx2::count_common(a, b) == kernels::scalar::count_common(a, b));
  }
  // Identical blocks and blocks sharing only their maxima.
  std::vector<std::uint32_t> same(64);
  for (std::uint32_t i = 0; i < 64; ++i) same[i] = 3 * i;
  CHECK(kernels::avx2::count_common(same, same) == 64);
  const std::vector<std::uint32_t> x{0, 1, 2, 3, 4, 5, 6, 100, 101};
  const std::vector<std::uint32_t> y{10, 11, 12, 13, 14, 15, 16, 100, 102};
  CHECK(kernels::avx2::count_common(x, y) == 1);

  std::uniform_int_distribution<std::uint32_t> big(0, 0xffffffffu);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::uint32_t> v(len(rng) * 37);
    for (auto& e : v) e = big(rng);
    REQUIRE(kernels::avx2::sum_u32(v) == kernels::scalar::sum_u32(v));
  }
}

TEST_CASE("graph statistics are identical under both ISAs") {
  if (!kernels::isa_supported(kernels::Isa::avx2)) return;
  IsaGuard guard;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = linkq::testing::random_graph(120, 0.15, rng);
    kernels::set_active_isa(kernels::Isa::scalar);
    const auto scalar_tri = triangles_per_node(g);
    const auto scalar_stats = graph_stats(g);
    kernels::set_active_isa(kernels::Isa::avx2);
    CHECK(triangles_per_node(g) == scalar_tri);
    const auto simd_stats = graph_stats(g);
    CHECK(simd_stats.clustering == scalar_stats.clustering);
    CHECK(simd_stats.transitivity == scalar_stats.transitivity);
  }
}
#endif

TEST_CASE("scalar is always selectable") {
  IsaGuard guard;
  CHECK(kernels::isa_supported(kernels::Isa::scalar));
  kernels::set_active_isa(kernels::Isa::scalar);
  CHECK(kernels::active_isa() == kernels::Isa::scalar);
  CHECK(kernels::isa_name(kernels::Isa::scalar) == "scalar");
}
