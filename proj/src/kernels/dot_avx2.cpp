// Compiled with -mavx2; only called after a runtime CPU check.
#include "drinfeld/kernels.hpp"

#if defined(DRINFELD_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <algorithm>

namespace drinfeld::kernels {

namespace {

// Lanes hold 64-bit partial sums; each lane receives one product per
// iteration from the even half and one from the odd half.
inline std::uint64_t horizontal_mod(__m256i even, __m256i odd, std::uint32_t p) {
  alignas(32) std::uint64_t lanes[8];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), even);
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes + 4), odd);
  std::uint64_t total = 0;
  for (std::uint64_t v : lanes) total = (total + v % p) % p;
  return total;
}

}  // namespace

std::uint32_t dot_mod_avx2(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                           std::uint32_t p) noexcept {
  const std::size_t n = std::min(a.size(), b.size());
  const std::size_t vec_end = n - n % 8;
  // Each 64-bit lane absorbs one product per 8 input elements.
  const std::uint64_t block = safe_accumulation_length(p);

  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i < vec_end) {
    __m256i even = _mm256_setzero_si256();
    __m256i odd = _mm256_setzero_si256();
    std::uint64_t steps = 0;
    for (; i < vec_end && steps < block; i += 8, ++steps) {
      const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a.data() + i));
      const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b.data() + i));
      even = _mm256_add_epi64(even, _mm256_mul_epu32(va, vb));
      odd = _mm256_add_epi64(odd, _mm256_mul_epu32(_mm256_srli_epi64(va, 32), _mm256_srli_epi64(vb, 32)));
    }
    total = (total + horizontal_mod(even, odd, p)) % p;
  }
  if (vec_end < n) {
    total = (total + dot_mod_scalar(a.subspan(vec_end, n - vec_end), b.subspan(vec_end, n - vec_end), p)) % p;
  }
  return static_cast<std::uint32_t>(total);
}

}  // namespace drinfeld::kernels

#endif
