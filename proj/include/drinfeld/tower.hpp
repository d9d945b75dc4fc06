#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "drinfeld/extension_field.hpp"
#include "drinfeld/matrix.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/small_field.hpp"

namespace drinfeld {

using Fq = SmallField;
using FqElem = Fq::Elem;
using FqPoly = Poly<FqElem>;
using FqMatrix = Matrix<FqElem>;
using KField = ExtensionField<SmallField>;
using KElem = KField::Elem;
using KPoly = Poly<KElem>;

/// The chain F_p ⊂ F_q = F_p[y]/f(y) ⊂ K = F_q[x]/Q(x).
///
/// Holds the matrices of a ↦ a^(q^s) for 0 <= s < d in the basis
/// (1, x, ..., x^(d-1)), column i being the image of x^i. Immutable after
/// construction and safe to share between threads.
class FieldTower {
 public:
  /// fq_modulus: ascending F_p coefficients of f, absent for q = p.
  /// k_modulus: ascending F_q coefficients of Q.
  /// Throws not_prime, non_monic_modulus, reducible_modulus, field_too_large.
  static std::shared_ptr<const FieldTower> build(std::uint32_t p, std::optional<std::vector<std::uint32_t>> fq_modulus,
                                                 std::vector<FqElem> k_modulus);

  /// Tower with moduli found by seeded random search.
  static std::shared_ptr<const FieldTower> random(std::uint32_t p, std::size_t e, std::size_t d, std::uint64_t seed);

  std::uint32_t p() const noexcept { return fq_->characteristic(); }
  std::size_t e() const noexcept { return fq_->degree(); }
  std::size_t d() const noexcept { return k_->degree(); }
  std::uint64_t q() const noexcept { return fq_->cardinality(); }
  bool has_fq_modulus() const noexcept { return has_fq_modulus_; }

  const Fq& fq() const noexcept { return *fq_; }
  const KField& k() const noexcept { return *k_; }
  const std::shared_ptr<const Fq>& fq_ptr() const noexcept { return fq_; }

  /// Matrix of a ↦ a^q.
  const FqMatrix& frobenius_matrix() const noexcept { return powers_[d() > 1 ? 1 : 0]; }
  /// Matrix of a ↦ a^(q^s); s is taken mod d, negative s allowed.
  const FqMatrix& frobenius_power(std::int64_t s) const noexcept;

  /// a^(q^s).
  KElem frobenius(const KElem& a, std::int64_t s) const;

  /// N_{K/F_q}(a) = a * a^q * ... * a^(q^(d-1)).
  FqElem norm(const KElem& a) const;

  /// Minimal polynomial of a over F_q (monic, irreducible, degree | d).
  FqPoly min_poly(const KElem& a) const;

  bool in_fq(const KElem& a) const { return k_->in_base(a); }
  /// Throws coefficient_not_rational when a is not in F_q.
  FqElem to_fq(const KElem& a) const { return k_->to_base(a); }
  KElem from_fq(FqElem c) const { return k_->from_base(c); }

  /// The F_q-linear map x ↦ a*x on K in the working basis.
  FqMatrix multiplication_matrix(const KElem& a) const;

 private:
  FieldTower(std::shared_ptr<const Fq> fq, std::shared_ptr<const KField> k, bool has_fq_modulus);

  std::shared_ptr<const Fq> fq_;
  std::shared_ptr<const KField> k_;
  bool has_fq_modulus_ = false;
  std::vector<FqMatrix> powers_;
};

/// P^(τ^s): every coefficient raised to the power q^s.
KPoly coeffwise_frobenius(const FieldTower& tower, const KPoly& p, std::int64_t s);

}  // namespace drinfeld
