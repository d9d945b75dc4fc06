#include "drinfeld/frobenius.hpp"

#include <cmath>
#include <stdexcept>

#include "drinfeld/errors.hpp"

namespace drinfeld {

std::string_view method_name(Method m) noexcept {
  switch (m) {
    case Method::mff: return "mff";
    case Method::mku: return "mku";
    case Method::csa: return "csa";
    case Method::automatic: return "auto";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
  if (name == "mff") return Method::mff;
  if (name == "mku") return Method::mku;
  if (name == "csa") return Method::csa;
  if (name == "auto") return Method::automatic;
  return std::nullopt;
}

PolyMatrix<KElem> tau_companion_matrix(const DrinfeldModule& phi) {
  const KField& k = phi.tower()->k();
  const std::size_t r = phi.rank();
  const auto& g = phi.coefficients();
  const KElem lead_inv = k.inv(g[r]);
  PolyMatrix<KElem> m(r, r, KPoly{});
  for (std::size_t j = 0; j + 1 < r; ++j) m(j + 1, j) = KPoly{{k.one()}};
  m(0, r - 1) = KPoly{{k.mul(k.neg(g[0]), lead_inv), lead_inv}};
  const PolyRing<KField> ring(k);
  for (std::size_t i = 1; i < r; ++i) m(i, r - 1) = ring.constant(k.neg(k.mul(g[i], lead_inv)));
  return m;
}

PolyMatrix<KElem> twist_entries(const FieldTower& tower, const PolyMatrix<KElem>& m, const FqMatrix& twist) {
  const PolyRing<KField> ring(tower.k());
  return map_entries(m, [&](const KPoly& p) {
    return ring.map_coeffs(p, [&](const KElem& c) { return mat_vec(tower.fq(), twist, std::span<const FqElem>(c)); });
  });
}

SemilinearPower mku_matrix(const DrinfeldModule& phi, std::size_t s) {
  if (s == 0) fail(Errc::invalid_argument, "semilinear power needs s >= 1");
  const FieldTower& t = *phi.tower();
  const PolyRing<KField> ring(t.k());
  if (s == 1) return {1, tau_companion_matrix(phi), t.frobenius_matrix()};

  const SemilinearPower half = mku_matrix(phi, s / 2);
  const Fq& fq = t.fq();
  if (s % 2 == 0) {
    PolyMatrix<KElem> m = mat_mul(ring, half.matrix, twist_entries(t, half.matrix, half.twist));
    return {s, std::move(m), mat_mul(fq, half.twist, half.twist)};
  }
  const FqMatrix& frob = t.frobenius_matrix();
  const FqMatrix twist_plus_one = mat_mul(fq, frob, half.twist);
  PolyMatrix<KElem> m = mat_mul(ring, tau_companion_matrix(phi), twist_entries(t, half.matrix, frob));
  m = mat_mul(ring, m, twist_entries(t, half.matrix, twist_plus_one));
  return {s, std::move(m), mat_mul(fq, twist_plus_one, half.twist)};
}

PolyMatrix<FqElem> csa_matrix(const FieldTower& tower, const OrePoly& p) {
  const Fq& fq = tower.fq();
  const std::size_t d = tower.d();
  const PolyRing<Fq> ring(fq);
  std::vector<FqMatrix> terms;  // F^(-j) G_j
  for (std::size_t j = 0; j < p.coeffs().size(); ++j)
    terms.push_back(mat_mul(fq, tower.frobenius_power(-static_cast<std::int64_t>(j)), tower.multiplication_matrix(p.coeffs()[j])));
  PolyMatrix<FqElem> out(d, d, FqPoly{});
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      std::vector<FqElem> c(terms.size());
      for (std::size_t j = 0; j < terms.size(); ++j) c[j] = terms[j](a, b);
      out(a, b) = ring.normalize(std::move(c));
    }
  return out;
}

CharPoly frobenius_charpoly_csa(const DrinfeldModule& phi) {
  const FieldTower& t = *phi.tower();
  const Fq& fq = t.fq();
  const std::size_t d = t.d();
  const std::size_t r = phi.rank();
  const auto m = csa_matrix(t, phi.phi_T());
  // Entries have t-degree <= r, so every coefficient has t-degree <= r*d.
  auto coeffs = charpoly_poly_matrix(fq, m, r * d, d, Strategy::eval_interp);
  detail::check_period(coeffs, fq, d);

  // coeffs[i] = sum_j λ_ij t^(jd); output X^j coefficient is sum_i λ_ij T^i.
  std::vector<std::vector<FqElem>> swapped(r + 1, std::vector<FqElem>(d + 1, fq.zero()));
  for (std::size_t i = 0; i <= d; ++i)
    for (std::size_t k = 0; k < coeffs[i].c.size(); k += d) {
      const std::size_t j = k / d;
      if (j > r) {
        if (!fq.is_zero(coeffs[i].c[k])) fail(Errc::non_periodic_coefficient, "reduced norm exceeds degree r in t^d");
        continue;
      }
      swapped[j][i] = coeffs[i].c[k];
    }

  const PolyRing<Fq> ring(fq);
  CharPoly out;
  for (auto& c : swapped) out.coeffs.push_back(ring.normalize(std::move(c)));
  // The reduced norm is only defined up to a unit of F_q.
  const FqPoly& lead = out.coeffs.back();
  if (lead.degree() != 0) fail(Errc::non_periodic_coefficient, "leading coefficient of the swapped charpoly is not a unit");
  const FqElem lead_inv = fq.inv(lead.c[0]);
  for (auto& c : out.coeffs) c = ring.scale(lead_inv, c);
  return out;
}

namespace {

CharPoly charpoly_from_k_matrix(const FieldTower& t, const PolyMatrix<KElem>& m, std::size_t bound) {
  const auto coeffs = charpoly_poly_matrix(t.k(), m, bound);
  CharPoly out;
  for (const auto& c : coeffs) out.coeffs.push_back(to_fq_poly(t, c));
  return out;
}

}  // namespace

CharPoly frobenius_charpoly(const DrinfeldModule& phi, Method method) {
  const FieldTower& t = *phi.tower();
  if (method == Method::automatic) method = select_method(t.d(), phi.rank(), phi.characteristic_degree());
  switch (method) {
    case Method::mff: return endomorphism_charpoly(frobenius_endomorphism(phi));
    case Method::mku: return charpoly_from_k_matrix(t, mku_matrix(phi, t.d()).matrix, t.d());
    case Method::csa: return frobenius_charpoly_csa(phi);
    case Method::automatic: break;
  }
  throw std::logic_error("unreachable method");
}

FrobeniusNorm frobenius_norm_formula(const DrinfeldModule& phi) {
  const FieldTower& t = *phi.tower();
  const Fq& fq = t.fq();
  const std::size_t r = phi.rank();
  const std::size_t d = t.d();
  const std::size_t m = phi.characteristic_degree();
  const PolyRing<Fq> ring(fq);

  FrobeniusNorm out;
  out.ideal.generator = ring.pow(phi.characteristic(), d / m);
  const auto exponent = static_cast<long long>(r * d) - static_cast<long long>(r) - static_cast<long long>(d);
  FqElem unit = fq.inv(t.norm(phi.leading()));
  if (exponent % 2 != 0) unit = fq.neg(unit);
  out.unit = unit;
  return out;
}

Method select_method(std::size_t d, std::size_t r, std::size_t m) noexcept {
  if (r >= d) return Method::csa;
  const double dd = static_cast<double>(d);
  if (static_cast<double>(r) >= std::pow(dd, 0.44) || static_cast<double>(m) <= std::sqrt(dd)) return Method::mku;
  return Method::mff;
}

}  // namespace drinfeld
