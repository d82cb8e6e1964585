#pragma once

// Inner-loop kernels with a portable scalar path and an AVX2 path chosen at
// runtime. Every variant must return bit-identical results.

#include <cstdint>
#include <span>
#include <string_view>

namespace linkq::kernels {

enum class Isa { scalar, avx2 };

/// ISA used by the dispatched entry points. Defaults to the best one the CPU
/// supports; LINKQ_FORCE_SCALAR=1 in the environment pins scalar.
Isa active_isa();
void set_active_isa(Isa isa);  // throws std::runtime_error if unsupported
bool isa_supported(Isa isa);
std::string_view isa_name(Isa isa);

/// |a ∩ b| for two strictly increasing sequences.
std::uint64_t count_common(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);

/// Σ values, widened to 64 bits.
std::uint64_t sum_u32(std::span<const std::uint32_t> values);

namespace scalar {
std::uint64_t count_common(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::uint64_t sum_u32(std::span<const std::uint32_t> values);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define LINKQ_HAVE_AVX2_KERNELS 1
namespace avx2 {
std::uint64_t count_common(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::uint64_t sum_u32(std::span<const std::uint32_t> values);
}  // namespace avx2
#endif

}  // namespace linkq::kernels
