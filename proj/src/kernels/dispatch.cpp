#include <atomic>
#include <cstdlib>
#include <string_view>

#include "drinfeld/kernels.hpp"

namespace drinfeld::kernels {

namespace {

using DotFn = std::uint32_t (*)(std::span<const std::uint32_t>, std::span<const std::uint32_t>,
                                std::uint32_t) noexcept;

DotFn pick(Isa isa) {
#if defined(DRINFELD_HAVE_AVX2_KERNELS)
  if (isa == Isa::avx2) return &dot_mod_avx2;
#endif
  (void)isa;
  return &dot_mod_scalar;
}

Isa detect() {
  if (const char* env = std::getenv("DRINFELD_ISA")) {
    const std::string_view want(env);
    if (want == "scalar") return Isa::scalar;
    if (want == "avx2" && isa_available(Isa::avx2)) return Isa::avx2;
  }
  return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
}

struct State {
  std::atomic<Isa> isa{detect()};
  std::atomic<DotFn> dot{pick(isa.load())};
};

State& state() {
  static State s;
  return s;
}

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

bool isa_available(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return true;
    case Isa::avx2:
#if defined(DRINFELD_HAVE_AVX2_KERNELS) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept { return state().isa.load(std::memory_order_relaxed); }

bool force_isa(Isa isa) noexcept {
  if (!isa_available(isa)) return false;
  state().isa.store(isa, std::memory_order_relaxed);
  state().dot.store(pick(isa), std::memory_order_relaxed);
  return true;
}

std::uint32_t dot_mod(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b,
                      std::uint32_t p) noexcept {
  return state().dot.load(std::memory_order_relaxed)(a, b, p);
}

}  // namespace drinfeld::kernels
