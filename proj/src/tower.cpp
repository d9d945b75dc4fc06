#include "drinfeld/tower.hpp"

#include <random>
#include <set>

#include "drinfeld/errors.hpp"

namespace drinfeld {

std::shared_ptr<const FieldTower> FieldTower::build(std::uint32_t p, std::optional<std::vector<std::uint32_t>> fq_modulus,
                                                    std::vector<FqElem> k_modulus) {
  const bool has_fq = fq_modulus.has_value();
  auto fq = has_fq ? std::make_shared<const Fq>(p, std::move(*fq_modulus)) : std::make_shared<const Fq>(p);
  for (auto c : k_modulus)
    if (c >= fq->cardinality()) fail(Errc::invalid_argument, "k_modulus coefficient outside F_q");
  auto k = std::make_shared<const KField>(fq, std::move(k_modulus));
  return std::shared_ptr<const FieldTower>(new FieldTower(std::move(fq), std::move(k), has_fq));
}

std::shared_ptr<const FieldTower> FieldTower::random(std::uint32_t p, std::size_t e, std::size_t d, std::uint64_t seed) {
  if (e == 0 || d == 0) fail(Errc::invalid_argument, "tower degrees must be positive");
  std::mt19937_64 rng(seed);
  std::optional<std::vector<std::uint32_t>> fq_modulus;
  std::shared_ptr<const Fq> fq;
  if (e == 1) {
    fq = std::make_shared<const Fq>(p);
  } else {
    const Fq prime(p);
    fq_modulus = random_irreducible(prime, e, rng).c;
    fq = std::make_shared<const Fq>(p, *fq_modulus);
  }
  auto k_modulus = random_irreducible(*fq, d, rng).c;
  return build(p, std::move(fq_modulus), std::move(k_modulus));
}

FieldTower::FieldTower(std::shared_ptr<const Fq> fq, std::shared_ptr<const KField> k, bool has_fq_modulus)
    : fq_(std::move(fq)), k_(std::move(k)), has_fq_modulus_(has_fq_modulus) {
  const std::size_t n = k_->degree();
  const Fq& f = *fq_;

  // Column i of F is (x^q)^i.
  const KElem xq = k_->pow(k_->generator(), fq_->cardinality());
  FqMatrix frob(n, n, f.zero());
  KElem col = k_->one();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) frob(r, i) = col[r];
    col = k_->mul(col, xq);
  }

  powers_.reserve(n);
  powers_.push_back(identity_matrix(f, n));
  for (std::size_t s = 1; s < n; ++s) powers_.push_back(mat_mul(f, powers_.back(), frob));
}

const FqMatrix& FieldTower::frobenius_power(std::int64_t s) const noexcept {
  const auto n = static_cast<std::int64_t>(d());
  std::int64_t r = s % n;
  if (r < 0) r += n;
  return powers_[static_cast<std::size_t>(r)];
}

KElem FieldTower::frobenius(const KElem& a, std::int64_t s) const {
  const auto n = static_cast<std::int64_t>(d());
  if (s % n == 0) return a;
  return mat_vec(*fq_, frobenius_power(s), std::span<const FqElem>(a));
}

FqElem FieldTower::norm(const KElem& a) const {
  KElem acc = a;
  KElem conj = a;
  for (std::size_t i = 1; i < d(); ++i) {
    conj = mat_vec(*fq_, frobenius_matrix(), std::span<const FqElem>(conj));
    acc = k_->mul(acc, conj);
  }
  return to_fq(acc);
}

FqPoly FieldTower::min_poly(const KElem& a) const {
  const PolyRing<KField> kring(*k_);
  KPoly acc = kring.one();
  KElem conj = a;
  do {
    acc = kring.mul(acc, KPoly{{k_->neg(conj), k_->one()}});
    conj = mat_vec(*fq_, frobenius_matrix(), std::span<const FqElem>(conj));
  } while (conj != a);
  FqPoly out;
  for (const auto& c : acc.c) out.c.push_back(to_fq(c));
  return out;
}

FqMatrix FieldTower::multiplication_matrix(const KElem& a) const {
  const std::size_t n = d();
  FqMatrix out(n, n, fq_->zero());
  KElem col = a;
  const KElem x = k_->generator();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < n; ++r) out(r, i) = col[r];
    col = k_->mul(col, x);
  }
  return out;
}

KPoly coeffwise_frobenius(const FieldTower& tower, const KPoly& p, std::int64_t s) {
  return PolyRing<KField>(tower.k()).map_coeffs(p, [&](const KElem& c) { return tower.frobenius(c, s); });
}

}  // namespace drinfeld
