#include "drinfeld/motive.hpp"

#include <algorithm>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

void check_coordinates([[maybe_unused]] std::ptrdiff_t n, [[maybe_unused]] std::size_t rank,
                       [[maybe_unused]] const CoordinateVector& v) {
#if defined(DRINFELD_CHECK_INVARIANTS)
  if (!coordinates_within_bounds(n, rank, v)) throw std::logic_error("motive coordinates exceed their degree bound");
#endif
}

CoordinateVector coordinates_rec(const DrinfeldModule& phi, const OrePoly& f, const PolyRing<KField>& ring) {
  const std::size_t r = phi.rank();
  CoordinateVector out(r);
  if (f.degree() < static_cast<std::ptrdiff_t>(r)) {
    for (std::size_t i = 0; i < r; ++i) out[i] = ring.constant(f.coeff(i));
    return out;
  }
  const std::size_t m = std::max<std::size_t>(1, static_cast<std::size_t>(f.degree()) / (2 * r));
  auto [a, b] = divmod_right(f, pow(phi.phi_T(), m));
  CoordinateVector ca = coordinates_rec(phi, a, ring);
  CoordinateVector cb = coordinates_rec(phi, b, ring);
  for (std::size_t i = 0; i < r; ++i) out[i] = ring.add(ring.shift(ca[i], m), cb[i]);
  return out;
}

}  // namespace

FqPoly to_fq_poly(const FieldTower& tower, const KPoly& p) {
  FqPoly out;
  out.c.reserve(p.c.size());
  for (const auto& c : p.c) out.c.push_back(tower.to_fq(c));
  return out;
}

KPoly to_k_poly(const FieldTower& tower, const FqPoly& p) {
  KPoly out;
  out.c.reserve(p.c.size());
  for (const auto& c : p.c) out.c.push_back(tower.from_fq(c));
  return out;
}

bool coordinates_within_bounds(std::ptrdiff_t n, std::size_t rank, const CoordinateVector& v) {
  if (v.size() != rank) return false;
  const auto r = static_cast<std::ptrdiff_t>(rank);
  for (std::ptrdiff_t i = 0; i < r; ++i) {
    const auto& fi = v[static_cast<std::size_t>(i)];
    if (n < i) {
      if (!fi.is_zero()) return false;
    } else if (fi.degree() * r > n - i) {
      return false;
    }
  }
  return true;
}

bool motive_matrix_within_bounds(std::ptrdiff_t n, const PolyMatrix<KElem>& m) {
  const auto r = static_cast<std::ptrdiff_t>(m.rows());
  for (std::ptrdiff_t i = 0; i < r; ++i)
    for (std::ptrdiff_t j = 0; j < r; ++j) {
      const auto& p = m(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (n + j < i) {
        if (!p.is_zero()) return false;
      } else if (p.degree() * r > n + j - i) {
        return false;
      }
    }
  return true;
}

CoordinateVector motive_coordinates(const DrinfeldModule& phi, const OrePoly& f) {
  if (f.tower() != phi.tower()) fail(Errc::tower_mismatch, "element and module over different towers");
  const PolyRing<KField> ring(phi.tower()->k());
  CoordinateVector out = coordinates_rec(phi, f, ring);
  check_coordinates(f.degree(), phi.rank(), out);
  return out;
}

CoordinateVector motive_tau_action(const DrinfeldModule& phi, const CoordinateVector& v) {
  const FieldTower& t = *phi.tower();
  const KField& k = t.k();
  const PolyRing<KField> ring(k);
  const std::size_t r = phi.rank();
  if (v.size() != r) fail(Errc::invalid_argument, "coordinate vector length differs from the rank");

  std::vector<KPoly> twisted(r);
  for (std::size_t i = 0; i < r; ++i)
    twisted[i] = coeffwise_frobenius(t, v[i], 1);

  const auto& g = phi.coefficients();
  const KElem lead_inv = k.inv(g[r]);
  const KPoly& last = twisted[r - 1];
  CoordinateVector out(r);
  // ((T - g_0)/g_r) f_(r-1)^τ
  const KPoly first{{k.mul(k.neg(g[0]), lead_inv), lead_inv}};
  out[0] = ring.mul(first, last);
  for (std::size_t i = 1; i < r; ++i)
    out[i] = ring.sub(twisted[i - 1], ring.scale(k.mul(g[i], lead_inv), last));
  return out;
}

PolyMatrix<KElem> motive_matrix(const DrinfeldModule& phi, const OrePoly& u) {
  const std::size_t r = phi.rank();
  PolyMatrix<KElem> m(r, r, KPoly{});
  CoordinateVector col = motive_coordinates(phi, u);
  for (std::size_t j = 0; j < r; ++j) {
    if (j > 0) col = motive_tau_action(phi, col);
    for (std::size_t i = 0; i < r; ++i) m(i, j) = col[i];
  }
#if defined(DRINFELD_CHECK_INVARIANTS)
  if (!motive_matrix_within_bounds(u.degree(), m)) throw std::logic_error("motive matrix exceeds its degree bound");
#endif
  return m;
}

PolyMatrix<KElem> motive_matrix(const Morphism& u) { return motive_matrix(u.domain(), u.ore()); }

CharPoly endomorphism_charpoly(const Morphism& u, Strategy strategy) {
  if (!u.is_endomorphism()) fail(Errc::not_endomorphism, "characteristic polynomial needs an endomorphism");
  const DrinfeldModule& phi = u.domain();
  const FieldTower& t = *phi.tower();
  const auto m = motive_matrix(u);
  const std::size_t bound = static_cast<std::size_t>(std::max<std::ptrdiff_t>(u.ore().degree(), 0));
  const auto coeffs = charpoly_poly_matrix(t.k(), m, bound, 1, strategy);
  CharPoly out;
  for (const auto& c : coeffs) out.coeffs.push_back(to_fq_poly(t, c));
  return out;
}

NormIdeal isogeny_norm(const Morphism& u, Strategy strategy) {
  if (u.ore().is_zero()) fail(Errc::zero_isogeny, "norm of the zero morphism");
  const FieldTower& t = *u.domain().tower();
  const auto m = motive_matrix(u);
  const PolyRing<KField> ring(t.k());
  const KPoly det = det_poly_matrix(t.k(), m, static_cast<std::size_t>(u.ore().degree()), strategy);
  return NormIdeal{to_fq_poly(t, ring.monic(det))};
}

}  // namespace drinfeld
