#include "drinfeld/oracle.hpp"

#include <optional>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

OrePoly horner_residue(const DrinfeldModule& phi, const OrePoly& u, const CharPoly& pi) {
  if (pi.coeffs.empty()) return OrePoly(phi.tower());
  OrePoly acc = phi.phi(pi.coeffs.back());
  for (std::size_t i = pi.coeffs.size() - 1; i-- > 0;) acc = acc * u + phi.phi(pi.coeffs[i]);
  return acc;
}

}  // namespace

OrePoly cayley_hamilton_residue(const Morphism& u, const CharPoly& pi) {
  if (!u.is_endomorphism()) fail(Errc::not_endomorphism, "Cayley-Hamilton residue needs an endomorphism");
  return horner_residue(u.domain(), u.ore(), pi);
}

OrePoly frobenius_residue(const DrinfeldModule& phi, const CharPoly& pi) {
  return horner_residue(phi, OrePoly::tau(phi.tower(), phi.tower()->d()), pi);
}

CharPoly rank2_trace_exhaustive(const DrinfeldModule& phi, std::uint64_t budget) {
  if (phi.rank() != 2) fail(Errc::invalid_argument, "exhaustive trace search needs rank 2");
  const FieldTower& t = *phi.tower();
  const Fq& fq = t.fq();
  const PolyRing<Fq> ring(fq);
  const std::size_t d = t.d();
  const std::size_t len = d / 2 + 1;  // coefficients of t

  std::uint64_t candidates = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (candidates > budget / t.q() + 1) fail(Errc::budget_exceeded, "trace search exceeds budget");
    candidates *= t.q();
  }
  if (candidates > budget) fail(Errc::budget_exceeded, "trace search exceeds budget");

  const FrobeniusNorm norm = frobenius_norm_formula(phi);
  const FqPoly pi0 = ring.scale(norm.unit, norm.ideal.generator);

  // Residue of X^2 - tX + π_0 is A - sum_k t_k B_k with A = φ_(π_0) + τ^(2d)
  // and B_k = φ_(T^k) τ^d. Candidates are enumerated by an odometer over the
  // F_p-digits of t; each step adds 1 to one digit, i.e. subtracts y^l B_k.
  const auto& tower = phi.tower();
  const KField& k = t.k();
  const OrePoly frob = OrePoly::tau(tower, d);
  const OrePoly a = phi.phi(pi0) + OrePoly::tau(tower, 2 * d);
  const std::size_t width = 2 * d + 1;  // τ-degrees of every term
  const auto flatten = [&](const OrePoly& f) {
    std::vector<FqElem> out(width * d, fq.zero());
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] = f.coeffs()[i][j];
    return out;
  };

  const std::size_t e = t.e();
  std::vector<std::vector<std::pair<std::size_t, FqElem>>> steps;  // sparse y^l B_k, digit index k*e + l
  FqElem y_power = fq.one();
  std::vector<FqElem> y_powers;
  for (std::size_t l = 0; l < e; ++l) {
    y_powers.push_back(y_power);
    y_power = fq.mul(y_power, fq.is_prime_field() ? fq.one() : fq.generator());
  }
  for (std::size_t kk = 0; kk < len; ++kk) {
    const OrePoly b = phi.phi(ring.monomial(fq.one(), kk)) * frob;
    for (std::size_t l = 0; l < e; ++l) {
      std::vector<std::pair<std::size_t, FqElem>> sparse;
      const auto flat = flatten(scale_left(k.from_base(y_powers[l]), b));
      for (std::size_t i = 0; i < flat.size(); ++i)
        if (!fq.is_zero(flat[i])) sparse.emplace_back(i, flat[i]);
      steps.push_back(std::move(sparse));
    }
  }

  std::vector<FqElem> residue = flatten(a);
  std::size_t nonzero = 0;
  for (FqElem c : residue) nonzero += !fq.is_zero(c);
  std::vector<std::uint32_t> digits(len * e, 0);
  const std::uint32_t p = t.p();

  std::optional<FqPoly> found;
  for (std::uint64_t n = 0; n < candidates; ++n) {
    if (nonzero == 0) {
      if (found) fail(Errc::multiple_candidates, "several traces annihilate the Frobenius");
      std::vector<FqElem> coeffs(len);
      for (std::size_t kk = 0; kk < len; ++kk)
        coeffs[kk] = fq.from_digits(std::span<const std::uint32_t>(digits.data() + kk * e, e));
      found = ring.normalize(std::move(coeffs));
    }
    for (std::size_t i = 0; i < digits.size(); ++i) {
      for (const auto& [pos, c] : steps[i]) {
        const bool was_zero = fq.is_zero(residue[pos]);
        residue[pos] = fq.sub(residue[pos], c);
        nonzero += static_cast<std::size_t>(was_zero) - static_cast<std::size_t>(fq.is_zero(residue[pos]));
      }
      if (++digits[i] < p) break;
      digits[i] = 0;  // p steps of +1 wrapped the digit back to zero
    }
  }
  if (!found) fail(Errc::no_candidate, "no trace annihilates the Frobenius");
  return CharPoly{{pi0, ring.neg(*found), ring.one()}};
}

}  // namespace drinfeld
