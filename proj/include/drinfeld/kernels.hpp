#pragma once

// Modular dot-product kernels over F_p.
//
// Every kernel computes sum_i a[i] * b[i] mod p for entries already reduced
// mod p and p < 2^31. The scalar version is the reference; vector variants
// must return bit-identical results. The active variant is picked once at
// first use from the CPU features, and can be pinned with the environment
// variable DRINFELD_ISA=scalar|avx2 or with force_isa().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace drinfeld::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa) noexcept;

/// True when the variant was compiled in and the running CPU supports it.
bool isa_available(Isa isa) noexcept;

Isa active_isa() noexcept;

/// Pins the dispatcher. Returns false (and changes nothing) if unavailable.
bool force_isa(Isa isa) noexcept;

std::uint32_t dot_mod_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                             std::uint32_t p) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
#define DRINFELD_HAVE_AVX2_KERNELS 1
std::uint32_t dot_mod_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::uint32_t p) noexcept;
#endif

/// Dispatching entry point. a and b must have equal length.
std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) noexcept;

/// Largest number of products (p-1)^2 that fit in an unsigned 64-bit accumulator.
constexpr std::uint64_t safe_accumulation_length(std::uint32_t p) noexcept {
  const std::uint64_t m = p > 1 ? static_cast<std::uint64_t>(p - 1) : 1;
  return ~std::uint64_t{0} / (m * m);
}

}  // namespace drinfeld::kernels
