#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// |F| when it fits in 64 bits.
template <Field F>
std::optional<std::uint64_t> field_cardinality(const F& f) {
  return std::optional<std::uint64_t>(f.cardinality());
}

/// Base[z]/Q(z) for a monic irreducible Q. Elements are coefficient vectors
/// of length degree(), always fully reduced.
template <Field Base>
class ExtensionField {
 public:
  using BaseElem = typename Base::Elem;
  using Elem = std::vector<BaseElem>;

  /// Throws non_monic_modulus, reducible_modulus (when check_irreducible).
  ExtensionField(std::shared_ptr<const Base> base, std::vector<BaseElem> modulus, bool check_irreducible = true)
      : base_(std::move(base)) {
    const Base& b = *base_;
    while (!modulus.empty() && b.is_zero(modulus.back())) modulus.pop_back();
    if (modulus.size() < 2) fail(Errc::reducible_modulus, "extension modulus must have positive degree");
    if (modulus.back() != b.one()) fail(Errc::non_monic_modulus, "extension modulus must be monic");
    if (check_irreducible && !is_irreducible(b, Poly<BaseElem>{modulus}))
      fail(Errc::reducible_modulus, "extension modulus is reducible");
    modulus_ = std::move(modulus);
    n_ = modulus_.size() - 1;
    build_reduction();
  }

  const Base& base() const noexcept { return *base_; }
  const std::shared_ptr<const Base>& base_ptr() const noexcept { return base_; }
  std::size_t degree() const noexcept { return n_; }
  const std::vector<BaseElem>& modulus() const noexcept { return modulus_; }
  std::uint64_t characteristic() const { return base_->characteristic(); }
  std::size_t absolute_degree() const { return base_->absolute_degree() * n_; }

  std::optional<std::uint64_t> cardinality() const {
    const auto b = field_cardinality(*base_);
    if (!b) return std::nullopt;
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < n_; ++i) {
      if (out > ~std::uint64_t{0} / *b) return std::nullopt;
      out *= *b;
    }
    return out;
  }

  Elem zero() const { return Elem(n_, base_->zero()); }
  Elem one() const { return from_base(base_->one()); }
  Elem from_base(const BaseElem& c) const {
    Elem out = zero();
    out[0] = c;
    return out;
  }
  /// The class of z.
  Elem generator() const {
    Elem out = zero();
    if (n_ == 1) {
      out[0] = base_->neg(modulus_[0]);
    } else {
      out[1] = base_->one();
    }
    return out;
  }
  /// Reduces an arbitrary-length coefficient vector.
  Elem from_coeffs(std::span<const BaseElem> coeffs) const {
    std::vector<BaseElem> work(coeffs.begin(), coeffs.end());
    reduce_in_place(work);
    return work;
  }

  bool is_zero(const Elem& a) const {
    for (const auto& x : a)
      if (!base_->is_zero(x)) return false;
    return true;
  }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool in_base(const Elem& a) const {
    for (std::size_t i = 1; i < n_; ++i)
      if (!base_->is_zero(a[i])) return false;
    return true;
  }
  /// Throws coefficient_not_rational if a is not in the base field.
  BaseElem to_base(const Elem& a) const {
    if (!in_base(a)) fail(Errc::coefficient_not_rational, "extension element does not lie in the base field");
    return a[0];
  }

  Elem add(const Elem& a, const Elem& b) const {
    Elem out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = base_->add(a[i], b[i]);
    return out;
  }
  Elem sub(const Elem& a, const Elem& b) const {
    Elem out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = base_->sub(a[i], b[i]);
    return out;
  }
  Elem neg(const Elem& a) const {
    Elem out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = base_->neg(a[i]);
    return out;
  }
  Elem scale(const BaseElem& s, const Elem& a) const {
    Elem out(n_);
    for (std::size_t i = 0; i < n_; ++i) out[i] = base_->mul(s, a[i]);
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    if (n_ == 1) return Elem{base_->mul(a[0], b[0])};
    std::vector<BaseElem> prod = convolve(*base_, std::span<const BaseElem>(a), std::span<const BaseElem>(b));
    // prod has 2n-1 entries; fold the top n-1 through the reduction table.
    const std::span<const BaseElem> high(prod.data() + n_, n_ - 1);
    Elem out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      out[i] = base_->add(prod[i], field_dot(*base_, high, std::span<const BaseElem>(reduce_cols_[i])));
    return out;
  }

  /// Throws division_by_zero for a = 0.
  Elem inv(const Elem& a) const {
    if (is_zero(a)) fail(Errc::division_by_zero, "inverse of zero in extension field");
    const PolyRing<Base> ring(*base_);
    auto [g, s, t] = ring.xgcd(ring.normalize(a), Poly<BaseElem>{modulus_});
    (void)t;
    Elem out = zero();
    for (std::size_t i = 0; i < s.c.size(); ++i) out[i] = s.c[i];
    return out;
  }

  Elem pow(Elem a, std::uint64_t k) const {
    Elem acc = one();
    while (k > 0) {
      if (k & 1) acc = mul(acc, a);
      k >>= 1;
      if (k > 0) a = mul(a, a);
    }
    return acc;
  }

  template <class Rng>
  Elem random(Rng& rng) const {
    Elem out(n_);
    for (auto& x : out) x = base_->random(rng);
    return out;
  }

 private:
  void reduce_in_place(std::vector<BaseElem>& work) const {
    for (std::size_t k = work.size(); k-- > n_;) {
      const BaseElem top = work[k];
      if (base_->is_zero(top)) continue;
      for (std::size_t j = 0; j < n_; ++j) work[k - n_ + j] = base_->sub(work[k - n_ + j], base_->mul(top, modulus_[j]));
      work[k] = base_->zero();
    }
    work.resize(n_, base_->zero());
  }

  // reduce_cols_[i][j] = coefficient of z^i in z^(n+j) mod Q, j < n-1.
  void build_reduction() {
    reduce_cols_.assign(n_, std::vector<BaseElem>(n_ > 1 ? n_ - 1 : 0, base_->zero()));
    for (std::size_t j = 0; j + 1 < n_; ++j) {
      std::vector<BaseElem> mono(n_ + j + 1, base_->zero());
      mono.back() = base_->one();
      reduce_in_place(mono);
      for (std::size_t i = 0; i < n_; ++i) reduce_cols_[i][j] = mono[i];
    }
  }

  std::shared_ptr<const Base> base_;
  std::vector<BaseElem> modulus_;
  std::size_t n_ = 1;
  std::vector<std::vector<BaseElem>> reduce_cols_;
};

}  // namespace drinfeld
