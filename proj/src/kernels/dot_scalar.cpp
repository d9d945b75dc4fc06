#include "drinfeld/kernels.hpp"

#include <algorithm>

namespace drinfeld::kernels {

std::uint32_t dot_mod_scalar(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                             std::uint32_t p) noexcept {
  const std::size_t n = std::min(a.size(), b.size());
  const std::uint64_t block = safe_accumulation_length(p);
  std::uint64_t total = 0;
  std::size_t i = 0;
  while (i < n) {
    const std::size_t stop = n - i > block ? i + block : n;
    std::uint64_t acc = 0;
    for (; i < stop; ++i) acc += static_cast<std::uint64_t>(a[i]) * b[i];
    total = (total + acc % p) % p;
  }
  return static_cast<std::uint32_t>(total);
}

}  // namespace drinfeld::kernels
