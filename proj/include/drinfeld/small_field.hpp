#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace drinfeld {

/// The finite field F_q with q = p^e, presented as F_p[y]/f(y).
///
/// Elements are canonical codes in [0, q): the code of sum_k c_k y^k is
/// sum_k c_k p^k, so 0 and 1 are the usual zero and one. For e = 1 the
/// arithmetic is plain modular arithmetic (p < 2^31). For e > 1 it runs on
/// exponential/logarithm tables over a primitive element, so q is capped at
/// max_table_size().
class SmallField {
 public:
  using Elem = std::uint32_t;

  /// Prime field F_p. Throws not_prime.
  explicit SmallField(std::uint32_t p);

  /// F_p[y]/f(y) for a monic irreducible f given by its ascending F_p
  /// coefficients. Throws not_prime, non_monic_modulus, reducible_modulus,
  /// field_too_large.
  SmallField(std::uint32_t p, std::vector<std::uint32_t> modulus);

  static constexpr std::uint64_t max_table_size() { return std::uint64_t{1} << 20; }

  std::uint32_t characteristic() const noexcept { return p_; }
  std::size_t degree() const noexcept { return e_; }
  std::size_t absolute_degree() const noexcept { return e_; }
  std::uint64_t cardinality() const noexcept { return q_; }
  bool is_prime_field() const noexcept { return log_.empty(); }
  /// Ascending F_p coefficients of the defining polynomial (y for e = 1 without one).
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  bool is_zero(Elem a) const noexcept { return a == 0; }
  bool equal(Elem a, Elem b) const noexcept { return a == b; }

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t v) const noexcept;
  /// The class of y. For e = 1 this is the root of the linear modulus.
  Elem generator() const noexcept { return y_; }

  Elem add(Elem a, Elem b) const noexcept;
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem neg(Elem a) const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  /// Throws division_by_zero for a = 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t k) const noexcept;

  /// sum_i a[i] b[i]; vectorized in the prime case.
  Elem dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  template <class Rng>
  Elem random(Rng& rng) const {
    std::uniform_int_distribution<std::uint64_t> dist(0, q_ - 1);
    return static_cast<Elem>(dist(rng));
  }

  bool operator==(const SmallField& other) const noexcept {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  void build_tables();

  std::uint32_t p_ = 2;
  std::size_t e_ = 1;
  std::uint64_t q_ = 2;
  std::vector<std::uint32_t> modulus_;
  Elem y_ = 0;
  // Zech representation, empty for prime fields.
  std::vector<std::uint32_t> exp_;   // exp_[i] = code of g^i, length q-1
  std::vector<std::uint32_t> log_;   // log_[code], log_[0] unused
  std::vector<std::uint32_t> zech_;  // zech_[n] = log(1 + g^n), q-1 means zero
  std::uint32_t log_minus_one_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Prime factors without multiplicity, ascending.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace drinfeld
