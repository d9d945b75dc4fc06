#pragma once

// Determinants and characteristic polynomials of matrices over F[T].
//
// Two interchangeable strategies:
//  - division_free: Berkowitz directly over F[T] (deterministic);
//  - eval_interp: specialize T at points of an extension E/F, solve over E,
//    interpolate. When the caller asserts that every coefficient lies in
//    F[T^s] (period s), the points only need pairwise distinct s-th powers
//    and interpolation runs in the variable T^s. Over a SmallField, sampling
//    fields of at most 2^20 elements use table arithmetic.
// Both return the exact result; eval_interp is Las Vegas in its point
// choice only, seeded for reproducibility.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <set>
#include <type_traits>
#include <utility>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/extension_field.hpp"
#include "drinfeld/matrix.hpp"
#include "drinfeld/poly.hpp"
#include "drinfeld/small_field.hpp"

namespace drinfeld {

enum class Strategy { division_free, eval_interp };

template <class C>
using PolyMatrix = Matrix<Poly<C>>;

inline constexpr std::uint64_t kDefaultPointSeed = 0x5eed5eedULL;

namespace detail {

/// Number of distinct s-th powers in a field of size q (0 included).
inline std::uint64_t distinct_powers(std::uint64_t q, std::uint64_t s) {
  return 1 + (q - 1) / std::gcd(s, q - 1);
}

/// Smallest extension degree k of F whose field has at least `want` distinct
/// s-th powers.
template <Field F>
std::size_t sampling_degree(const F& f, std::uint64_t want, std::uint64_t s) {
  const auto base = field_cardinality(f);
  if (!base) return 1;
  std::uint64_t q = 1;
  for (std::size_t k = 1;; ++k) {
    if (q > ~std::uint64_t{0} / *base) return k;
    q *= *base;
    if (distinct_powers(q, s) >= want) return k;
  }
}

/// E = F[z]/(Q) with vector arithmetic.
template <Field F>
struct ExtensionSampler {
  using Field = ExtensionField<F>;
  std::shared_ptr<const F> base;
  Field ext;
  const Field& field() const { return ext; }
  typename Field::Elem embed(const typename F::Elem& c) const { return ext.from_base(c); }
  typename F::Elem project(const typename Field::Elem& a) const { return ext.to_base(a); }
};

template <Field F>
ExtensionSampler<F> make_extension_sampler(const F& f, std::size_t degree, std::mt19937_64& rng) {
  // Non-owning handle: the extension lives only inside the caller's scope.
  std::shared_ptr<const F> base(&f, [](const F*) {});
  std::vector<typename F::Elem> modulus;
  if (degree == 1) {
    modulus = {f.zero(), f.one()};
  } else {
    modulus = random_irreducible(f, degree, rng).c;
  }
  return {base, ExtensionField<F>(base, std::move(modulus), false)};
}

/// F_(p^(ek)) as a table-driven SmallField; F_q = F_p[y]/(f) sits inside
/// through a root of f.
struct TableSampler {
  using Field = SmallField;
  static constexpr std::uint32_t kNotRational = ~std::uint32_t{0};
  SmallField big;
  std::vector<SmallField::Elem> embed_table;
  std::vector<std::uint32_t> project_table;
  const Field& field() const { return big; }
  SmallField::Elem embed(SmallField::Elem c) const { return embed_table[c]; }
  SmallField::Elem project(SmallField::Elem a) const {
    const std::uint32_t c = project_table[a];
    if (c == kNotRational) fail(Errc::coefficient_not_rational, "interpolated value does not lie in the base field");
    return c;
  }
};

inline TableSampler make_table_sampler(const SmallField& f, std::size_t degree, std::mt19937_64& rng) {
  const std::uint32_t p = f.characteristic();
  const std::size_t n = f.degree() * degree;
  const SmallField fp(p);
  TableSampler s{n == 1 ? SmallField(p) : SmallField(p, random_irreducible(fp, n, rng).c), {}, {}};
  const SmallField& big = s.big;
  SmallField::Elem root = 0;
  if (f.degree() > 1) {
    const auto& fmod = f.modulus();
    for (std::uint64_t code = 1; code < big.cardinality(); ++code) {
      const auto x = static_cast<SmallField::Elem>(code);
      SmallField::Elem acc = 0;
      for (std::size_t i = fmod.size(); i-- > 0;) acc = big.add(big.mul(acc, x), fmod[i]);
      if (acc == 0) {
        root = x;
        break;
      }
    }
  }
  s.embed_table.resize(f.cardinality());
  s.project_table.assign(big.cardinality(), TableSampler::kNotRational);
  for (std::uint64_t code = 0; code < f.cardinality(); ++code) {
    auto image = static_cast<SmallField::Elem>(code);
    if (f.degree() > 1) {
      const auto digits = f.digits(image);
      image = 0;
      for (std::size_t l = digits.size(); l-- > 0;) image = big.add(big.mul(image, root), digits[l]);
    }
    s.embed_table[code] = image;
    s.project_table[image] = static_cast<std::uint32_t>(code);
  }
  return s;
}

/// Calls fn(sampler) for a sampling field of the given degree over F.
template <Field F, class Fn>
auto with_sampler(const F& f, std::size_t degree, std::mt19937_64& rng, Fn&& fn) {
  if constexpr (std::is_same_v<F, SmallField>) {
    std::uint64_t size = 1;
    bool fits = true;
    for (std::size_t i = 0; i < degree && fits; ++i) {
      size *= f.cardinality();
      fits = size <= SmallField::max_table_size();
    }
    if (fits) return fn(make_table_sampler(f, degree, rng));
  }
  return fn(make_extension_sampler(f, degree, rng));
}

template <class Sampler, class C>
auto eval_at(const Sampler& s, const Poly<C>& p, const typename Sampler::Field::Elem& x) {
  const auto& e = s.field();
  auto acc = e.zero();
  for (std::size_t i = p.c.size(); i-- > 0;) acc = e.add(e.mul(acc, x), s.embed(p.c[i]));
  return acc;
}

/// Points with pairwise distinct s-th powers; returns (point, point^s).
template <Field E>
std::vector<std::pair<typename E::Elem, typename E::Elem>> sample_points(const E& e, std::size_t count,
                                                                         std::uint64_t s, std::mt19937_64& rng) {
  std::vector<std::pair<typename E::Elem, typename E::Elem>> out;
  std::set<typename E::Elem> seen;
  // Generous cap; the extension is sized for at least 2*count distinct values.
  const std::size_t max_attempts = 64 * count + 1024;
  for (std::size_t attempt = 0; out.size() < count; ++attempt) {
    if (attempt > max_attempts) fail(Errc::insufficient_points, "could not sample enough evaluation points");
    auto x = e.random(rng);
    auto key = e.pow(x, s);
    if (seen.insert(key).second) out.emplace_back(std::move(x), std::move(key));
  }
  return out;
}

/// Reassembles sum_j c_j u^j with u = T^s into a polynomial of F[T].
template <Field F, class Sampler>
Poly<typename F::Elem> expand_period(const F& f, const Sampler& sampler,
                                     const Poly<typename Sampler::Field::Elem>& in_u, std::size_t s) {
  std::vector<typename F::Elem> out(in_u.c.empty() ? 0 : (in_u.c.size() - 1) * s + 1, f.zero());
  for (std::size_t j = 0; j < in_u.c.size(); ++j) out[j * s] = sampler.project(in_u.c[j]);
  return PolyRing<F>(f).normalize(std::move(out));
}

template <Field F>
void check_period(const std::vector<Poly<typename F::Elem>>& coeffs, const F& f, std::size_t period) {
  if (period <= 1) return;
  for (const auto& c : coeffs)
    for (std::size_t k = 0; k < c.c.size(); ++k)
      if (k % period != 0 && !f.is_zero(c.c[k]))
        fail(Errc::non_periodic_coefficient, "characteristic polynomial coefficient is not a polynomial in T^s");
}

}  // namespace detail

/// Exact det(M). degree_bound must be at least deg det(M).
template <Field F>
Poly<typename F::Elem> det_poly_matrix(const F& f, const PolyMatrix<typename F::Elem>& m, std::size_t degree_bound,
                                       Strategy strategy = Strategy::division_free,
                                       std::uint64_t seed = kDefaultPointSeed) {
  if (!m.is_square()) fail(Errc::not_square, "determinant of a non-square matrix");
  const PolyRing<F> ring(f);
  if (strategy == Strategy::division_free) return berkowitz_det(ring, m);

  std::mt19937_64 rng(seed);
  const std::size_t count = degree_bound + 1;
  return detail::with_sampler(f, detail::sampling_degree(f, 2 * count, 1), rng, [&](const auto& sampler) {
    const auto& e = sampler.field();
    using E = std::decay_t<decltype(e)>;
    std::vector<std::pair<typename E::Elem, typename E::Elem>> values;
    for (const auto& [x, key] : detail::sample_points(e, count, 1, rng)) {
      auto at = map_entries(m, [&](const Poly<typename F::Elem>& p) { return detail::eval_at(sampler, p, x); });
      values.emplace_back(key, gauss_det(e, std::move(at)));
    }
    return detail::expand_period(f, sampler, PolyRing<E>(e).interpolate(values), 1);
  });
}

/// Exact det(X*I - M) as ascending X-coefficients over F[T] (length n+1).
/// degree_bound bounds the T-degree of every coefficient; with period s > 1
/// the caller asserts every coefficient lies in F[T^s].
template <Field F>
std::vector<Poly<typename F::Elem>> charpoly_poly_matrix(const F& f, const PolyMatrix<typename F::Elem>& m,
                                                         std::size_t degree_bound, std::size_t period = 1,
                                                         Strategy strategy = Strategy::division_free,
                                                         std::uint64_t seed = kDefaultPointSeed) {
  if (!m.is_square()) fail(Errc::not_square, "characteristic polynomial of a non-square matrix");
  if (period == 0) fail(Errc::invalid_argument, "period must be positive");
  const std::size_t n = m.rows();

  if (strategy == Strategy::division_free) {
    auto out = berkowitz_charpoly(PolyRing<F>(f), m);
    detail::check_period(out, f, period);
    return out;
  }

  std::mt19937_64 rng(seed);
  const std::size_t count = degree_bound / period + 1;
  return detail::with_sampler(f, detail::sampling_degree(f, 2 * count, period), rng, [&](const auto& sampler) {
    const auto& e = sampler.field();
    using E = std::decay_t<decltype(e)>;
    std::vector<std::vector<std::pair<typename E::Elem, typename E::Elem>>> per_coeff(n + 1);
    for (const auto& [x, key] : detail::sample_points(e, count, period, rng)) {
      auto at = map_entries(m, [&](const Poly<typename F::Elem>& p) { return detail::eval_at(sampler, p, x); });
      const auto cp = hessenberg_charpoly(e, std::move(at));
      for (std::size_t i = 0; i <= n; ++i) per_coeff[i].emplace_back(key, cp[i]);
    }
    const PolyRing<E> ering(e);
    std::vector<Poly<typename F::Elem>> out;
    out.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i)
      out.push_back(detail::expand_period(f, sampler, ering.interpolate(per_coeff[i]), period));
    return out;
  });
}

}  // namespace drinfeld
