#include "drinfeld/drinfeld_module.hpp"

#include <random>

#include "drinfeld/errors.hpp"

namespace drinfeld {

DrinfeldModule::DrinfeldModule(std::shared_ptr<const FieldTower> tower, std::vector<KElem> g)
    : tower_(std::move(tower)), g_(std::move(g)) {
  if (g_.size() < 2) fail(Errc::rank_zero, "a Drinfeld module needs rank at least one");
  for (const auto& c : g_)
    if (c.size() != tower_->d()) fail(Errc::invalid_argument, "coefficient of φ_T has wrong length");
  if (tower_->k().is_zero(g_.back())) fail(Errc::zero_leading_coefficient, "leading coefficient of φ_T is zero");
  phi_T_ = OrePoly(tower_, g_);
  char_poly_ = tower_->min_poly(g_.front());
}

OrePoly DrinfeldModule::phi(const FqPoly& a) const {
  OrePoly acc(tower_);
  for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * phi_T_ + OrePoly::constant(tower_, tower_->from_fq(a.c[i]));
  return acc;
}

bool is_morphism(const DrinfeldModule& phi, const DrinfeldModule& psi, const OrePoly& u) {
  if (phi.tower() != psi.tower() || u.tower() != phi.tower()) return false;
  if (phi.gamma() != psi.gamma()) return false;
  return u * phi.phi_T() == psi.phi_T() * u;
}

Morphism::Morphism(DrinfeldModule domain, DrinfeldModule codomain, OrePoly u)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), u_(std::move(u)) {
  if (domain_.tower() != codomain_.tower() || u_.tower() != domain_.tower())
    fail(Errc::tower_mismatch, "morphism data over different towers");
  if (domain_.gamma() != codomain_.gamma()) fail(Errc::gamma_mismatch, "domain and codomain have different γ(T)");
  if (!(u_ * domain_.phi_T() == codomain_.phi_T() * u_)) fail(Errc::not_a_morphism, "u φ_T != ψ_T u");
  if (!u_.is_zero() && height(u_) % domain_.characteristic_degree() != 0)
    throw std::logic_error("morphism height not divisible by deg p");
}

Morphism frobenius_endomorphism(const DrinfeldModule& phi) {
  return Morphism(phi, phi, OrePoly::tau(phi.tower(), phi.tower()->d()));
}

std::optional<DrinfeldModule> push_forward(const DrinfeldModule& phi, const OrePoly& u) {
  if (u.is_zero()) fail(Errc::zero_polynomial, "push-forward along the zero Ore polynomial");
  auto [quo, rem] = divmod_right(u * phi.phi_T(), u);
  if (!rem.is_zero() || quo.degree() != phi.phi_T().degree()) return std::nullopt;
  std::vector<KElem> g = quo.coeffs();
  if (g.front() != phi.gamma()) return std::nullopt;
  return DrinfeldModule(phi.tower(), std::move(g));
}

Morphism compose(const Morphism& v, const Morphism& u) {
  if (!(u.codomain() == v.domain())) fail(Errc::not_a_morphism, "morphisms are not composable");
  return Morphism(u.domain(), v.codomain(), v.ore() * u.ore());
}

DrinfeldModule random_module(std::shared_ptr<const FieldTower> tower, std::size_t rank, std::uint64_t seed) {
  if (rank == 0) fail(Errc::rank_zero, "a Drinfeld module needs rank at least one");
  std::mt19937_64 rng(seed);
  const KField& k = tower->k();
  std::vector<KElem> g;
  for (std::size_t i = 0; i < rank; ++i) g.push_back(k.random(rng));
  KElem lead;
  do {
    lead = k.random(rng);
  } while (k.is_zero(lead));
  g.push_back(std::move(lead));
  return DrinfeldModule(std::move(tower), std::move(g));
}

}  // namespace drinfeld
