#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"

namespace drinfeld::testing {

/// F_9 = F_3[x]/(x^2 + 1).
inline std::shared_ptr<const FieldTower> f9() { return FieldTower::build(3, std::nullopt, {1, 0, 1}); }

/// a + b x in F_9.
inline KElem k9(FqElem a, FqElem b) { return {a, b}; }

/// φ_T = x + τ + τ^2 over F_9.
inline DrinfeldModule instance_a() {
  auto t = f9();
  return DrinfeldModule(t, {k9(0, 1), k9(1, 0), k9(1, 0)});
}

inline FqPoly fq_poly(std::vector<FqElem> c) { return FqPoly{std::move(c)}; }

struct TowerParams {
  std::uint32_t p;
  std::size_t e;
  std::size_t d;
};

inline OrePoly random_ore(const std::shared_ptr<const FieldTower>& t, std::size_t degree, std::mt19937_64& rng) {
  std::vector<KElem> c(degree + 1);
  for (auto& x : c) x = t->k().random(rng);
  return OrePoly(t, std::move(c));
}

inline FqPoly random_fq_poly(const Fq& fq, std::size_t degree, std::mt19937_64& rng) {
  std::vector<FqElem> c(degree + 1);
  for (auto& x : c) x = fq.random(rng);
  return PolyRing<Fq>(fq).normalize(std::move(c));
}

}  // namespace drinfeld::testing
