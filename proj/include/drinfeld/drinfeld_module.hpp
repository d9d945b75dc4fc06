#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "drinfeld/ore.hpp"
#include "drinfeld/tower.hpp"

namespace drinfeld {

/// Drinfeld F_q[T]-module φ over K, determined by φ_T = g_0 + g_1 τ + ... + g_r τ^r.
///
/// γ is represented by its value γ(T) = g_0. The characteristic is the
/// minimal polynomial p(T) of g_0 over F_q, of degree m.
class DrinfeldModule {
 public:
  /// Throws rank_zero (fewer than two coefficients), zero_leading_coefficient.
  DrinfeldModule(std::shared_ptr<const FieldTower> tower, std::vector<KElem> g);

  const std::shared_ptr<const FieldTower>& tower() const noexcept { return tower_; }
  std::size_t rank() const noexcept { return g_.size() - 1; }
  const std::vector<KElem>& coefficients() const noexcept { return g_; }
  const KElem& gamma() const noexcept { return g_.front(); }
  const KElem& leading() const noexcept { return g_.back(); }
  const OrePoly& phi_T() const noexcept { return phi_T_; }
  const FqPoly& characteristic() const noexcept { return char_poly_; }
  std::size_t characteristic_degree() const noexcept { return static_cast<std::size_t>(char_poly_.degree()); }

  /// φ_a by Horner in K{τ}; τ-degree r*deg(a).
  OrePoly phi(const FqPoly& a) const;

  bool operator==(const DrinfeldModule& other) const { return tower_ == other.tower_ && g_ == other.g_; }

 private:
  std::shared_ptr<const FieldTower> tower_;
  std::vector<KElem> g_;
  OrePoly phi_T_;
  FqPoly char_poly_;
};

/// Ore polynomial u with u φ_a = ψ_a u for all a. Validated on construction.
class Morphism {
 public:
  /// Throws tower_mismatch, gamma_mismatch, not_a_morphism.
  Morphism(DrinfeldModule domain, DrinfeldModule codomain, OrePoly u);

  const DrinfeldModule& domain() const noexcept { return domain_; }
  const DrinfeldModule& codomain() const noexcept { return codomain_; }
  const OrePoly& ore() const noexcept { return u_; }
  bool is_endomorphism() const { return domain_ == codomain_; }
  bool is_isogeny() const noexcept { return !u_.is_zero(); }

 private:
  DrinfeldModule domain_;
  DrinfeldModule codomain_;
  OrePoly u_;
};

/// True when u φ_T = ψ_T u (with equal towers and γ); never throws.
bool is_morphism(const DrinfeldModule& phi, const DrinfeldModule& psi, const OrePoly& u);

/// The endomorphism τ^d.
Morphism frobenius_endomorphism(const DrinfeldModule& phi);

/// ψ with ψ_T u = u φ_T, when u φ_T is right-divisible by u and ψ has the
/// same γ as φ; empty otherwise. Throws zero_polynomial for u = 0.
std::optional<DrinfeldModule> push_forward(const DrinfeldModule& phi, const OrePoly& u);

/// Composite v∘u = v*u of u: φ → ψ and v: ψ → χ.
Morphism compose(const Morphism& v, const Morphism& u);

/// Deterministic in seed; g_0 uniform in K, g_r uniform in K \ {0}.
DrinfeldModule random_module(std::shared_ptr<const FieldTower> tower, std::size_t rank, std::uint64_t seed);

}  // namespace drinfeld
