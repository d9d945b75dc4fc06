#include <gtest/gtest.h>

#include <random>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/errors.hpp"
#include "support.hpp"

using namespace drinfeld;
using namespace drinfeld::testing;

namespace {

template <class Fn>
Errc code_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::invalid_argument;
}

}  // namespace

TEST(DrinfeldModule, InstanceA) {
  const DrinfeldModule phi = instance_a();
  EXPECT_EQ(phi.rank(), 2u);
  EXPECT_EQ(phi.characteristic(), fq_poly({1, 0, 1}));
  EXPECT_EQ(phi.characteristic_degree(), 2u);
}

TEST(DrinfeldModule, Construction) {
  const auto t = f9();
  EXPECT_EQ(DrinfeldModule(t, {k9(0, 1), k9(0, 0), k9(1, 0)}).rank(), 2u);
  EXPECT_EQ(code_of([&] { DrinfeldModule(t, {k9(0, 1), k9(0, 0)}); }), Errc::zero_leading_coefficient);
  EXPECT_EQ(code_of([&] { DrinfeldModule(t, {k9(0, 1)}); }), Errc::rank_zero);
}

TEST(DrinfeldModule, PhiOfPolynomials) {
  const DrinfeldModule phi = instance_a();
  const auto& t = phi.tower();
  EXPECT_EQ(phi.phi(fq_poly({0, 1})), phi.phi_T());
  EXPECT_EQ(phi.phi(fq_poly({2})), OrePoly::constant(t, k9(2, 0)));
  const OrePoly sq = phi.phi(fq_poly({0, 0, 1}));
  EXPECT_EQ(sq, phi.phi_T() * phi.phi_T());
  EXPECT_EQ(sq.degree(), 4);
}

TEST(Morphism, Examples) {
  const DrinfeldModule phi = instance_a();
  const auto& t = phi.tower();
  EXPECT_TRUE(Morphism(phi, phi, phi.phi_T()).is_endomorphism());
  EXPECT_TRUE(is_morphism(phi, phi, OrePoly::tau(t, 2)));
  EXPECT_EQ(code_of([&] { Morphism(phi, phi, OrePoly::tau(t)); }), Errc::not_a_morphism);
  EXPECT_FALSE(is_morphism(phi, phi, OrePoly::tau(t)));
  EXPECT_EQ(frobenius_endomorphism(phi).ore(), OrePoly::tau(t, 2));
}

TEST(Morphism, GammaMismatch) {
  const DrinfeldModule phi = instance_a();
  const DrinfeldModule psi(phi.tower(), {k9(0, 2), k9(1, 0), k9(1, 0)});
  EXPECT_EQ(code_of([&] { Morphism(phi, psi, OrePoly::tau(phi.tower())); }), Errc::gamma_mismatch);
}

TEST(Morphism, FrobeniusOfDegreeOneTower) {
  const auto t = FieldTower::build(5, std::nullopt, {2, 1});
  const DrinfeldModule phi(t, {KElem{3}, KElem{1}, KElem{4}});
  EXPECT_EQ(frobenius_endomorphism(phi).ore(), OrePoly::tau(t));
}

TEST(PushForward, Examples) {
  const DrinfeldModule phi = instance_a();
  const auto& t = phi.tower();
  EXPECT_EQ(push_forward(phi, phi.phi_T()), phi);
  EXPECT_EQ(push_forward(phi, OrePoly::tau(t, 2)), phi);
  EXPECT_FALSE(push_forward(phi, OrePoly::tau(t)).has_value());
  EXPECT_THROW(push_forward(phi, OrePoly(t)), Error);
}

TEST(RandomModule, Deterministic) {
  const auto t = FieldTower::random(3, 2, 4, 5);
  EXPECT_EQ(random_module(t, 2, 42), random_module(t, 2, 42));
  EXPECT_EQ(random_module(t, 1, 1).rank(), 1u);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const DrinfeldModule phi = random_module(t, 1 + seed % 4, seed);
    EXPECT_FALSE(t->k().is_zero(phi.leading()));
    EXPECT_EQ(t->d() % phi.characteristic_degree(), 0u);
    EXPECT_TRUE(is_irreducible(t->fq(), phi.characteristic()));
  }
}

TEST(Morphism, StrongCommutationAndDegrees) {
  std::mt19937_64 rng(8);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto t = FieldTower::random(seed % 2 ? 3 : 2, 1 + seed % 2, 2 + seed % 4, seed);
    const DrinfeldModule phi = random_module(t, 1 + seed % 3, seed);
    const Morphism frob = frobenius_endomorphism(phi);
    const Morphism endo(phi, phi, phi.phi(random_fq_poly(t->fq(), 2, rng)) + frob.ore());
    for (int i = 0; i < 5; ++i) {
      const FqPoly a = random_fq_poly(t->fq(), rng() % 4, rng);
      for (const Morphism* u : {&frob, &endo}) EXPECT_EQ(u->ore() * phi.phi(a), phi.phi(a) * u->ore());
      if (!a.is_zero()) EXPECT_EQ(phi.phi(a).degree(), static_cast<std::ptrdiff_t>(phi.rank()) * a.degree());
    }
  }
}

TEST(Morphism, IsogenyAndComposition) {
  const DrinfeldModule phi = instance_a();
  const Morphism a(phi, phi, phi.phi_T());
  const Morphism b = frobenius_endomorphism(phi);
  const Morphism ab = compose(a, b);
  EXPECT_EQ(ab.ore(), phi.phi_T() * OrePoly::tau(phi.tower(), 2));
  EXPECT_TRUE(ab.is_isogeny());
}
