#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "drinfeld/tower.hpp"

namespace drinfeld {

/// Element of K{τ} with τa = a^q τ. Coefficients ascend in τ-degree and
/// carry no trailing zeros.
class OrePoly {
 public:
  OrePoly() = default;
  explicit OrePoly(std::shared_ptr<const FieldTower> tower) : tower_(std::move(tower)) {}
  OrePoly(std::shared_ptr<const FieldTower> tower, std::vector<KElem> coeffs);

  static OrePoly constant(std::shared_ptr<const FieldTower> tower, KElem c);
  /// c τ^k
  static OrePoly monomial(std::shared_ptr<const FieldTower> tower, KElem c, std::size_t k);
  /// τ^k
  static OrePoly tau(std::shared_ptr<const FieldTower> tower, std::size_t k = 1);

  const std::shared_ptr<const FieldTower>& tower() const noexcept { return tower_; }
  const std::vector<KElem>& coeffs() const noexcept { return coeffs_; }
  /// Zero outside the stored range.
  KElem coeff(std::size_t i) const;

  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }

  bool operator==(const OrePoly& other) const { return tower_ == other.tower_ && coeffs_ == other.coeffs_; }

 private:
  void trim();

  std::shared_ptr<const FieldTower> tower_;
  std::vector<KElem> coeffs_;
};

OrePoly operator+(const OrePoly& f, const OrePoly& g);
OrePoly operator-(const OrePoly& f, const OrePoly& g);
OrePoly operator-(const OrePoly& f);
/// Schoolbook product with (f_i τ^i)(g_j τ^j) = f_i g_j^(q^i) τ^(i+j). Throws tower_mismatch.
OrePoly operator*(const OrePoly& f, const OrePoly& g);

/// c * f (left scalar multiplication).
OrePoly scale_left(const KElem& c, const OrePoly& f);

/// (Q, R) with f = Q*g + R and deg R < deg g. Throws division_by_zero, tower_mismatch.
std::pair<OrePoly, OrePoly> divmod_right(const OrePoly& f, const OrePoly& g);

OrePoly pow(OrePoly f, std::uint64_t k);

/// Index of the lowest nonzero coefficient. Throws zero_polynomial.
std::size_t height(const OrePoly& f);

}  // namespace drinfeld
