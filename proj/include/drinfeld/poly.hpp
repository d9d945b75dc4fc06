#pragma once

// Dense univariate polynomials over any field of the tower.
//
// A field type F exposes `Elem` plus zero/one/add/sub/neg/mul/inv/is_zero,
// characteristic() and absolute_degree(). PolyRing<F> is a lightweight view
// over a field object that must outlive it; polynomial values themselves are
// plain data (Poly<C>) and carry no context.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/small_field.hpp"

namespace drinfeld {

template <class R>
concept Ring = requires(const R& r, const typename R::Elem& a) {
  typename R::Elem;
  { r.zero() } -> std::convertible_to<typename R::Elem>;
  { r.one() } -> std::convertible_to<typename R::Elem>;
  { r.add(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.sub(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.neg(a) } -> std::convertible_to<typename R::Elem>;
  { r.mul(a, a) } -> std::convertible_to<typename R::Elem>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
};

template <class F>
concept Field = Ring<F> && requires(const F& f, const typename F::Elem& a) {
  { f.inv(a) } -> std::convertible_to<typename F::Elem>;
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.absolute_degree() } -> std::convertible_to<std::size_t>;
};

/// sum_i a[i] * b[i], using the field's vector kernel when it has one.
template <Ring R>
typename R::Elem field_dot(const R& r, std::span<const typename R::Elem> a,
                           std::span<const typename R::Elem> b) {
  if constexpr (requires { r.dot(a, b); }) {
    return r.dot(a, b);
  } else {
    typename R::Elem acc = r.zero();
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) acc = r.add(acc, r.mul(a[i], b[i]));
    return acc;
  }
}

/// Full product of two coefficient sequences (no trimming).
template <Ring R>
std::vector<typename R::Elem> convolve(const R& r, std::span<const typename R::Elem> a,
                                       std::span<const typename R::Elem> b) {
  using E = typename R::Elem;
  if (a.empty() || b.empty()) return {};
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  std::vector<E> out(na + nb - 1, r.zero());
  if constexpr (requires { r.dot(a, b); }) {
    std::vector<E> rb(b.rbegin(), b.rend());
    for (std::size_t k = 0; k < out.size(); ++k) {
      const std::size_t lo = k >= nb - 1 ? k - (nb - 1) : 0;
      const std::size_t hi = std::min(k, na - 1);
      // b index k - i runs down from k - lo; in rb that is nb - 1 - (k - lo).
      out[k] = r.dot(a.subspan(lo, hi - lo + 1), std::span<const E>(rb).subspan(nb - 1 - (k - lo), hi - lo + 1));
    }
  } else {
    for (std::size_t i = 0; i < na; ++i) {
      if (r.is_zero(a[i])) continue;
      for (std::size_t j = 0; j < nb; ++j) out[i + j] = r.add(out[i + j], r.mul(a[i], b[j]));
    }
  }
  return out;
}

/// Coefficients in ascending degree; the zero polynomial is empty.
template <class C>
struct Poly {
  std::vector<C> c;

  std::ptrdiff_t degree() const noexcept { return static_cast<std::ptrdiff_t>(c.size()) - 1; }
  bool is_zero() const noexcept { return c.empty(); }
  bool operator==(const Poly&) const = default;
};

/// Degree reported for the zero polynomial; strictly below every real degree.
inline constexpr std::ptrdiff_t kZeroDegree = -1;

template <Field F>
class PolyRing {
 public:
  using Coeff = typename F::Elem;
  using Elem = Poly<Coeff>;

  explicit PolyRing(const F& field) : f_(&field) {}

  const F& field() const noexcept { return *f_; }

  Elem zero() const { return {}; }
  Elem one() const { return constant(f_->one()); }
  Elem constant(const Coeff& c) const { return monomial(c, 0); }
  Elem variable() const { return monomial(f_->one(), 1); }
  Elem monomial(const Coeff& c, std::size_t k) const {
    if (f_->is_zero(c)) return {};
    Elem out{std::vector<Coeff>(k + 1, f_->zero())};
    out.c[k] = c;
    return out;
  }

  bool is_zero(const Elem& a) const noexcept { return a.c.empty(); }
  Coeff coeff(const Elem& a, std::size_t k) const { return k < a.c.size() ? a.c[k] : f_->zero(); }
  Coeff leading(const Elem& a) const { return a.c.empty() ? f_->zero() : a.c.back(); }

  Elem normalize(std::vector<Coeff> c) const {
    while (!c.empty() && f_->is_zero(c.back())) c.pop_back();
    return Elem{std::move(c)};
  }

  Elem add(const Elem& a, const Elem& b) const {
    std::vector<Coeff> out(std::max(a.c.size(), b.c.size()), f_->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = f_->add(out[i], b.c[i]);
    return normalize(std::move(out));
  }

  Elem sub(const Elem& a, const Elem& b) const {
    std::vector<Coeff> out(std::max(a.c.size(), b.c.size()), f_->zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] = a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] = f_->sub(out[i], b.c[i]);
    return normalize(std::move(out));
  }

  Elem neg(const Elem& a) const {
    Elem out = a;
    for (auto& x : out.c) x = f_->neg(x);
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    return normalize(convolve(*f_, std::span<const Coeff>(a.c), std::span<const Coeff>(b.c)));
  }

  Elem scale(const Coeff& s, const Elem& a) const {
    if (f_->is_zero(s)) return {};
    Elem out = a;
    for (auto& x : out.c) x = f_->mul(s, x);
    return out;
  }

  /// a * T^k
  Elem shift(const Elem& a, std::size_t k) const {
    if (a.c.empty()) return {};
    Elem out{std::vector<Coeff>(k, f_->zero())};
    out.c.insert(out.c.end(), a.c.begin(), a.c.end());
    return out;
  }

  Elem pow(Elem base, std::uint64_t k) const {
    Elem acc = one();
    while (k > 0) {
      if (k & 1) acc = mul(acc, base);
      k >>= 1;
      if (k > 0) base = mul(base, base);
    }
    return acc;
  }

  /// a = q*b + r with deg r < deg b. Throws division_by_zero.
  std::pair<Elem, Elem> divmod(const Elem& a, const Elem& b) const {
    if (b.c.empty()) fail(Errc::division_by_zero, "polynomial division by zero");
    if (a.c.size() < b.c.size()) return {Elem{}, a};
    std::vector<Coeff> rem = a.c;
    const std::size_t db = b.c.size() - 1;
    std::vector<Coeff> quo(a.c.size() - db, f_->zero());
    const Coeff lead_inv = f_->inv(b.c.back());
    for (std::size_t k = quo.size(); k-- > 0;) {
      const Coeff top = rem[k + db];
      if (f_->is_zero(top)) continue;
      const Coeff c = f_->mul(top, lead_inv);
      quo[k] = c;
      for (std::size_t j = 0; j <= db; ++j) rem[k + j] = f_->sub(rem[k + j], f_->mul(c, b.c[j]));
    }
    rem.resize(db);
    return {normalize(std::move(quo)), normalize(std::move(rem))};
  }

  Elem rem(const Elem& a, const Elem& b) const { return divmod(a, b).second; }
  Elem quo(const Elem& a, const Elem& b) const { return divmod(a, b).first; }

  Elem monic(const Elem& a) const {
    if (a.c.empty()) return a;
    return scale(f_->inv(a.c.back()), a);
  }

  /// Monic gcd; gcd(0, 0) = 0.
  Elem gcd(Elem a, Elem b) const {
    while (!b.c.empty()) {
      Elem r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  /// (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
  std::tuple<Elem, Elem, Elem> xgcd(const Elem& a, const Elem& b) const {
    Elem r0 = a, r1 = b, s0 = one(), s1 = zero(), t0 = zero(), t1 = one();
    while (!r1.c.empty()) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::exchange(r1, std::move(r));
      s0 = std::exchange(s1, sub(s0, mul(q, s1)));
      t0 = std::exchange(t1, sub(t0, mul(q, t1)));
    }
    if (r0.c.empty()) return {r0, s0, t0};
    const Coeff u = f_->inv(r0.c.back());
    return {scale(u, r0), scale(u, s0), scale(u, t0)};
  }

  Coeff eval(const Elem& a, const Coeff& x) const {
    Coeff acc = f_->zero();
    for (std::size_t i = a.c.size(); i-- > 0;) acc = f_->add(f_->mul(acc, x), a.c[i]);
    return acc;
  }

  Elem mulmod(const Elem& a, const Elem& b, const Elem& m) const { return rem(mul(a, b), m); }

  Elem powmod(Elem base, std::uint64_t k, const Elem& m) const {
    Elem acc = rem(one(), m);
    base = rem(base, m);
    while (k > 0) {
      if (k & 1) acc = mulmod(acc, base, m);
      k >>= 1;
      if (k > 0) base = mulmod(base, base, m);
    }
    return acc;
  }

  /// a^Q mod m where Q = |F|, as absolute_degree() successive p-th powers.
  Elem frobenius_mod(const Elem& a, const Elem& m) const {
    Elem out = rem(a, m);
    for (std::size_t i = 0; i < f_->absolute_degree(); ++i) out = powmod(out, f_->characteristic(), m);
    return out;
  }

  /// Lagrange interpolation through pairwise distinct abscissae.
  Elem interpolate(std::span<const std::pair<Coeff, Coeff>> points) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j)
        if (points[i].first == points[j].first) fail(Errc::duplicate_abscissa, "interpolation abscissae repeat");

    // Master product prod (T - x_i), then divide out one factor per point.
    Elem master = one();
    for (const auto& [x, y] : points) master = mul(master, linear_factor(x));
    Elem out;
    for (const auto& [x, y] : points) {
      Elem basis = quo(master, linear_factor(x));
      const Coeff denom = eval(basis, x);
      out = add(out, scale(f_->mul(y, f_->inv(denom)), basis));
    }
    return out;
  }

  /// Coefficient-wise image under fn.
  template <class Fn>
  Elem map_coeffs(const Elem& a, Fn&& fn) const {
    std::vector<Coeff> out;
    out.reserve(a.c.size());
    for (const auto& x : a.c) out.push_back(fn(x));
    return normalize(std::move(out));
  }

 private:
  Elem linear_factor(const Coeff& x) const { return Elem{{f_->neg(x), f_->one()}}; }

  const F* f_;
};

/// Rabin's test for a monic polynomial of positive degree.
template <Field F>
bool is_irreducible(const F& f, const Poly<typename F::Elem>& g) {
  const PolyRing<F> ring(f);
  const std::ptrdiff_t n = g.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto x = ring.variable();
  std::vector<Poly<typename F::Elem>> powers{ring.rem(x, g)};  // powers[i] = x^(Q^i) mod g
  for (std::ptrdiff_t i = 1; i <= n; ++i) powers.push_back(ring.frobenius_mod(powers.back(), g));
  if (powers[static_cast<std::size_t>(n)] != powers[0]) return false;
  for (std::uint64_t ell : prime_factors(static_cast<std::uint64_t>(n))) {
    const auto h = ring.sub(powers[static_cast<std::size_t>(n) / ell], powers[0]);
    if (ring.gcd(h, g).degree() != 0) return false;
  }
  return true;
}

template <Field F, class Rng>
Poly<typename F::Elem> random_monic(const F& f, std::size_t degree, Rng& rng) {
  Poly<typename F::Elem> out;
  for (std::size_t i = 0; i < degree; ++i) out.c.push_back(f.random(rng));
  out.c.push_back(f.one());
  return out;
}

/// Random search for a monic irreducible polynomial of the given degree.
template <Field F, class Rng>
Poly<typename F::Elem> random_irreducible(const F& f, std::size_t degree, Rng& rng) {
  if (degree == 0) fail(Errc::invalid_argument, "irreducible polynomials have positive degree");
  for (;;) {
    auto g = random_monic(f, degree, rng);
    if (is_irreducible(f, g)) return g;
  }
}

}  // namespace drinfeld
