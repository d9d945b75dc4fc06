#include "drinfeld/ore.hpp"

#include <algorithm>

#include "drinfeld/errors.hpp"

namespace drinfeld {

namespace {

const FieldTower& common_tower(const OrePoly& f, const OrePoly& g) {
  if (!f.tower() || f.tower() != g.tower()) fail(Errc::tower_mismatch, "Ore polynomials over different towers");
  return *f.tower();
}

}  // namespace

OrePoly::OrePoly(std::shared_ptr<const FieldTower> tower, std::vector<KElem> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_)
    if (c.size() != tower_->d()) fail(Errc::invalid_argument, "Ore coefficient has wrong length");
  trim();
}

OrePoly OrePoly::constant(std::shared_ptr<const FieldTower> tower, KElem c) { return monomial(std::move(tower), std::move(c), 0); }

OrePoly OrePoly::monomial(std::shared_ptr<const FieldTower> tower, KElem c, std::size_t k) {
  std::vector<KElem> coeffs(k + 1, tower->k().zero());
  coeffs[k] = std::move(c);
  return OrePoly(std::move(tower), std::move(coeffs));
}

OrePoly OrePoly::tau(std::shared_ptr<const FieldTower> tower, std::size_t k) {
  KElem one = tower->k().one();
  return monomial(std::move(tower), std::move(one), k);
}

KElem OrePoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : tower_->k().zero(); }

void OrePoly::trim() {
  const KField& k = tower_->k();
  while (!coeffs_.empty() && k.is_zero(coeffs_.back())) coeffs_.pop_back();
}

OrePoly operator+(const OrePoly& f, const OrePoly& g) {
  const KField& k = common_tower(f, g).k();
  std::vector<KElem> out(std::max(f.coeffs().size(), g.coeffs().size()), k.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] = k.add(out[i], g.coeffs()[i]);
  return OrePoly(f.tower(), std::move(out));
}

OrePoly operator-(const OrePoly& f, const OrePoly& g) {
  const KField& k = common_tower(f, g).k();
  std::vector<KElem> out(std::max(f.coeffs().size(), g.coeffs().size()), k.zero());
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) out[i] = f.coeffs()[i];
  for (std::size_t i = 0; i < g.coeffs().size(); ++i) out[i] = k.sub(out[i], g.coeffs()[i]);
  return OrePoly(f.tower(), std::move(out));
}

OrePoly operator-(const OrePoly& f) {
  std::vector<KElem> out = f.coeffs();
  for (auto& c : out) c = f.tower()->k().neg(c);
  return OrePoly(f.tower(), std::move(out));
}

OrePoly operator*(const OrePoly& f, const OrePoly& g) {
  const FieldTower& t = common_tower(f, g);
  if (f.is_zero() || g.is_zero()) return OrePoly(f.tower());
  const KField& k = t.k();
  const auto& fc = f.coeffs();
  const auto& gc = g.coeffs();
  std::vector<KElem> out(fc.size() + gc.size() - 1, k.zero());
  std::vector<KElem> twisted(gc.size());
  for (std::size_t i = 0; i < fc.size(); ++i) {
    if (k.is_zero(fc[i])) continue;
    for (std::size_t j = 0; j < gc.size(); ++j) twisted[j] = t.frobenius(gc[j], static_cast<std::int64_t>(i));
    for (std::size_t j = 0; j < gc.size(); ++j) out[i + j] = k.add(out[i + j], k.mul(fc[i], twisted[j]));
  }
  return OrePoly(f.tower(), std::move(out));
}

OrePoly scale_left(const KElem& c, const OrePoly& f) {
  std::vector<KElem> out = f.coeffs();
  for (auto& x : out) x = f.tower()->k().mul(c, x);
  return OrePoly(f.tower(), std::move(out));
}

std::pair<OrePoly, OrePoly> divmod_right(const OrePoly& f, const OrePoly& g) {
  const FieldTower& t = common_tower(f, g);
  if (g.is_zero()) fail(Errc::division_by_zero, "Ore division by zero");
  const KField& k = t.k();
  if (f.degree() < g.degree()) return {OrePoly(f.tower()), f};

  const auto m = static_cast<std::size_t>(g.degree());
  const auto& gc = g.coeffs();
  std::vector<KElem> rem = f.coeffs();
  std::vector<KElem> quo(rem.size() - m, k.zero());
  std::vector<KElem> twisted(gc.size());
  for (std::size_t shift = quo.size(); shift-- > 0;) {
    const KElem& top = rem[shift + m];
    if (k.is_zero(top)) continue;
    // c τ^shift g has leading coefficient c * g_m^(q^shift).
    for (std::size_t j = 0; j < gc.size(); ++j) twisted[j] = t.frobenius(gc[j], static_cast<std::int64_t>(shift));
    const KElem c = k.mul(top, k.inv(twisted[m]));
    quo[shift] = c;
    for (std::size_t j = 0; j <= m; ++j) rem[shift + j] = k.sub(rem[shift + j], k.mul(c, twisted[j]));
  }
  rem.resize(m);
  return {OrePoly(f.tower(), std::move(quo)), OrePoly(f.tower(), std::move(rem))};
}

OrePoly pow(OrePoly f, std::uint64_t k) {
  OrePoly acc = OrePoly::tau(f.tower(), 0);
  while (k > 0) {
    if (k & 1) acc = acc * f;
    k >>= 1;
    if (k > 0) f = f * f;
  }
  return acc;
}

std::size_t height(const OrePoly& f) {
  if (f.is_zero()) fail(Errc::zero_polynomial, "height of the zero Ore polynomial");
  const KField& k = f.tower()->k();
  std::size_t h = 0;
  while (k.is_zero(f.coeffs()[h])) ++h;
  return h;
}

}  // namespace drinfeld
