#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "drinfeld/poly_matrix.hpp"
#include "drinfeld/tower.hpp"
#include "support.hpp"

using namespace drinfeld;
using namespace drinfeld::testing;

namespace {

/// det by the Leibniz permutation sum.
template <Ring R>
typename R::Elem leibniz_det(const R& r, const Matrix<typename R::Elem>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  auto total = r.zero();
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    auto term = r.one();
    for (std::size_t i = 0; i < n; ++i) term = r.mul(term, m(i, perm[i]));
    total = inversions % 2 ? r.sub(total, term) : r.add(total, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

template <Field F>
PolyMatrix<typename F::Elem> random_poly_matrix(const F& f, std::size_t n, std::size_t deg, std::mt19937_64& rng) {
  PolyMatrix<typename F::Elem> m(n, n, {});
  const PolyRing<F> ring(f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<typename F::Elem> c(rng() % (deg + 1) + 1);
      for (auto& x : c) x = f.random(rng);
      m(i, j) = ring.normalize(std::move(c));
    }
  return m;
}

/// det(X I - M) at X = x via Leibniz, for checking charpoly coefficients.
template <Field F>
typename F::Elem charpoly_at(const F& f, const Matrix<typename F::Elem>& m, const typename F::Elem& x) {
  Matrix<typename F::Elem> a = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = f.sub(i == j ? x : f.zero(), m(i, j));
  return leibniz_det(f, a);
}

}  // namespace

TEST(Linalg, BerkowitzAndGaussMatchLeibniz) {
  const SmallField f(7);
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int rep = 0; rep < 10; ++rep) {
      Matrix<SmallField::Elem> m(n, n, 0);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
      const auto expected = leibniz_det(f, m);
      EXPECT_EQ(berkowitz_det(f, m), expected);
      EXPECT_EQ(gauss_det(f, m), expected);
      const auto bk = berkowitz_charpoly(f, m);
      EXPECT_EQ(bk, hessenberg_charpoly(f, m));
      for (SmallField::Elem x = 0; x < 7; ++x) {
        SmallField::Elem v = 0;
        for (std::size_t i = bk.size(); i-- > 0;) v = f.add(f.mul(v, x), bk[i]);
        EXPECT_EQ(v, charpoly_at(f, m, x));
      }
    }
}

TEST(Linalg, SingularAndZeroMatrices) {
  const SmallField f(5);
  Matrix<SmallField::Elem> zero(3, 3, 0);
  EXPECT_EQ(gauss_det(f, zero), 0u);
  EXPECT_EQ(hessenberg_charpoly(f, zero), (std::vector<SmallField::Elem>{0, 0, 0, 1}));
  EXPECT_EQ(berkowitz_charpoly(f, zero), (std::vector<SmallField::Elem>{0, 0, 0, 1}));
}

TEST(Linalg, BerkowitzOverPolynomialsMatchesLeibniz) {
  const auto t = f9();
  const PolyRing<KField> ring(t->k());
  std::mt19937_64 rng(2);
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto m = random_poly_matrix(t->k(), n, 3, rng);
    EXPECT_EQ(berkowitz_det(ring, m), leibniz_det(ring, m));
  }
}

TEST(PolyMatrix, IdentityAndDiagonal) {
  const auto t = f9();
  const KField& k = t->k();
  const PolyRing<KField> ring(k);
  const PolyMatrix<KElem> id = identity_matrix(ring, 3);
  for (auto s : {Strategy::division_free, Strategy::eval_interp}) EXPECT_EQ(det_poly_matrix(k, id, 0, s), ring.one());
  PolyMatrix<KElem> diag(2, 2, KPoly{});
  diag(0, 0) = diag(1, 1) = ring.variable();
  for (auto s : {Strategy::division_free, Strategy::eval_interp})
    EXPECT_EQ(det_poly_matrix(k, diag, 2, s), ring.monomial(k.one(), 2));
}

TEST(PolyMatrix, InstanceAMotiveOfFrobenius) {
  const auto t = f9();
  const KField& k = t->k();
  PolyMatrix<KElem> m(2, 2, KPoly{});
  m(0, 0) = KPoly{{k9(0, 2), k9(1, 0)}};  // T + 2x
  m(0, 1) = KPoly{{k9(0, 1), k9(2, 0)}};  // 2T + x
  m(1, 0) = KPoly{{k9(2, 0)}};
  m(1, 1) = KPoly{{k9(1, 1), k9(1, 0)}};  // T + x + 1
  const KPoly t2p1{{k9(1, 0), k9(0, 0), k9(1, 0)}};
  for (auto s : {Strategy::division_free, Strategy::eval_interp}) {
    EXPECT_EQ(det_poly_matrix(k, m, 2, s), t2p1);
    const auto cp = charpoly_poly_matrix(k, m, 2, 1, s);
    ASSERT_EQ(cp.size(), 3u);
    EXPECT_EQ(cp[0], t2p1);
    EXPECT_EQ(cp[1], (KPoly{{k9(2, 0), k9(1, 0)}}));  // -(2T + 1) = T + 2
    EXPECT_EQ(cp[2], KPoly{{k9(1, 0)}});
  }
}

TEST(PolyMatrix, ZeroMatrixCharpoly) {
  const SmallField f(3);
  const PolyMatrix<SmallField::Elem> zero(3, 3, {});
  for (auto s : {Strategy::division_free, Strategy::eval_interp}) {
    const auto cp = charpoly_poly_matrix(f, zero, 0, 1, s);
    EXPECT_EQ(cp, (std::vector<FqPoly>{{}, {}, {}, fq_poly({1})}));
  }
}

TEST(PolyMatrix, CsaMatrixWithPeriod) {
  const SmallField f(3);
  PolyMatrix<SmallField::Elem> m(2, 2, {});
  m(0, 0) = fq_poly({0, 1, 1});  // t^2 + t
  m(0, 1) = fq_poly({2});
  m(1, 0) = fq_poly({1});
  m(1, 1) = fq_poly({0, 2, 1});  // t^2 + 2t
  for (auto s : {Strategy::division_free, Strategy::eval_interp}) {
    const auto cp = charpoly_poly_matrix(f, m, 4, 2, s);
    EXPECT_EQ(cp[0], fq_poly({1, 0, 2, 0, 1}));
    EXPECT_EQ(cp[1], fq_poly({0, 0, 1}));  // -2t^2
    EXPECT_EQ(cp[2], fq_poly({1}));
  }
}

TEST(PolyMatrix, NonPeriodicIsRejected) {
  const SmallField f(3);
  PolyMatrix<SmallField::Elem> m(1, 1, fq_poly({0, 1}));
  try {
    charpoly_poly_matrix(f, m, 1, 2, Strategy::division_free);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::non_periodic_coefficient);
  }
}

TEST(PolyMatrix, NonSquareRejected) {
  const SmallField f(3);
  PolyMatrix<SmallField::Elem> m(2, 3, {});
  EXPECT_THROW(det_poly_matrix(f, m, 0), Error);
  EXPECT_THROW(charpoly_poly_matrix(f, m, 0), Error);
}

TEST(PolyMatrix, StrategiesAgreeOverF9) {
  const auto t = f9();
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    const std::size_t n = 1 + rng() % 6;
    const std::size_t deg = rng() % 9;
    const auto m = random_poly_matrix(t->k(), n, deg, rng);
    EXPECT_EQ(det_poly_matrix(t->k(), m, n * deg, Strategy::division_free),
              det_poly_matrix(t->k(), m, n * deg, Strategy::eval_interp));
    EXPECT_EQ(charpoly_poly_matrix(t->k(), m, n * deg, 1, Strategy::division_free),
              charpoly_poly_matrix(t->k(), m, n * deg, 1, Strategy::eval_interp));
  }
}

TEST(PolyMatrix, EvalInterpDependsOnlyOnSeedForPoints) {
  const SmallField f(2);
  std::mt19937_64 rng(4);
  const auto m = random_poly_matrix(f, 4, 5, rng);
  const auto reference = det_poly_matrix(f, m, 20, Strategy::division_free);
  for (std::uint64_t seed : {1ull, 2ull, 99ull}) EXPECT_EQ(det_poly_matrix(f, m, 20, Strategy::eval_interp, seed), reference);
}
