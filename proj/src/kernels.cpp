#include "linkq/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#if defined(LINKQ_HAVE_AVX2_KERNELS)
#include <immintrin.h>
#endif

namespace linkq::kernels {

namespace scalar {

std::uint64_t count_common(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::uint64_t count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

std::uint64_t sum_u32(std::span<const std::uint32_t> values) {
  std::uint64_t total = 0;
  for (std::uint32_t x : values) total += x;
  return total;
}

}  // namespace scalar

#if defined(LINKQ_HAVE_AVX2_KERNELS)
namespace avx2 {

// Block intersection: an 8-lane block of `a` is compared against all eight
// rotations of an 8-lane block of `b`. Inputs must be strictly increasing,
// so each equal pair is seen in exactly one block comparison.
__attribute__((target("avx2"))) std::uint64_t count_common(std::span<const std::uint32_t> a,
                                                          std::span<const std::uint32_t> b) {
  std::uint64_t count = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  if (a.size() >= 8 && b.size() >= 8) {
    const __m256i rot1 = _mm256_setr_epi32(1, 2, 3, 4, 5, 6, 7, 0);
    const std::size_t a_end = a.size() - a.size() % 8;
    const std::size_t b_end = b.size() - b.size() % 8;
    while (i < a_end && j < b_end) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
      __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + j));
      __m256i hits = _mm256_cmpeq_epi32(va, vb);
      for (int r = 1; r < 8; ++r) {
        vb = _mm256_permutevar8x32_epi32(vb, rot1);
        hits = _mm256_or_si256(hits, _mm256_cmpeq_epi32(va, vb));
      }
      const unsigned mask = static_cast<unsigned>(_mm256_movemask_ps(_mm256_castsi256_ps(hits)));
      count += static_cast<std::uint64_t>(__builtin_popcount(mask));
      const std::uint32_t a_max = a[i + 7];
      const std::uint32_t b_max = b[j + 7];
      if (a_max <= b_max) i += 8;
      if (b_max <= a_max) j += 8;
    }
  }
  return count + scalar::count_common(a.subspan(i), b.subspan(j));
}

__attribute__((target("avx2"))) std::uint64_t sum_u32(std::span<const std::uint32_t> values) {
  __m256i acc0 = _mm256_setzero_si256();
  __m256i acc1 = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= values.size(); i += 8) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(values.data() + i));
    acc0 = _mm256_add_epi64(acc0, _mm256_cvtepu32_epi64(_mm256_castsi256_si128(v)));
    acc1 = _mm256_add_epi64(acc1, _mm256_cvtepu32_epi64(_mm256_extracti128_si256(v, 1)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_add_epi64(acc0, acc1));
  return lanes[0] + lanes[1] + lanes[2] + lanes[3] + scalar::sum_u32(values.subspan(i));
}

}  // namespace avx2
#endif

namespace {

Isa detect_best() {
  if (const char* force = std::getenv("LINKQ_FORCE_SCALAR"); force && *force && *force != '0') {
    return Isa::scalar;
  }
  return isa_supported(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect_best()};
  return isa;
}

}  // namespace

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(LINKQ_HAVE_AVX2_KERNELS)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_active_isa(Isa isa) {
  if (!isa_supported(isa)) {
    throw std::runtime_error("kernel ISA not supported on this CPU: " + std::string(isa_name(isa)));
  }
  current().store(isa, std::memory_order_relaxed);
}

std::uint64_t count_common(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
#if defined(LINKQ_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::avx2) return avx2::count_common(a, b);
#endif
  return scalar::count_common(a, b);
}

std::uint64_t sum_u32(std::span<const std::uint32_t> values) {
#if defined(LINKQ_HAVE_AVX2_KERNELS)
  if (active_isa() == Isa::avx2) return avx2::sum_u32(values);
#endif
  return scalar::sum_u32(values);
}

}  // namespace linkq::kernels
