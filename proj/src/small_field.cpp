#include "drinfeld/small_field.hpp"

#include <string>

#include "drinfeld/kernels.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    while (n % k == 0) n /= k;
  }
  if (n > 1) out.push_back(n);
  return out;
}

namespace {

void check_prime(std::uint32_t p) {
  if (!is_prime(p) || p >= (std::uint32_t{1} << 31))
    fail(Errc::not_prime, std::to_string(p) + " is not a prime below 2^31");
}

}  // namespace

SmallField::SmallField(std::uint32_t p) : p_(p), e_(1), q_(p), modulus_{0, 1}, y_(0) { check_prime(p); }

SmallField::SmallField(std::uint32_t p, std::vector<std::uint32_t> modulus) : p_(p) {
  check_prime(p);
  for (auto& c : modulus) c %= p;
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2) fail(Errc::reducible_modulus, "modulus of F_q must have positive degree");
  if (modulus.back() != 1) fail(Errc::non_monic_modulus, "modulus of F_q must be monic");

  const SmallField prime(p);
  if (!is_irreducible(prime, Poly<Elem>{modulus}))
    fail(Errc::reducible_modulus, "modulus of F_q is reducible over F_p");

  e_ = modulus.size() - 1;
  modulus_ = std::move(modulus);
  q_ = 1;
  for (std::size_t i = 0; i < e_; ++i) {
    q_ *= p_;
    if (q_ > max_table_size() && e_ > 1) fail(Errc::field_too_large, "F_q too large for table arithmetic");
  }
  if (e_ == 1) {
    y_ = (p_ - modulus_[0]) % p_;
    return;
  }
  y_ = p_;  // digits (0, 1)
  build_tables();
}

void SmallField::build_tables() {
  // Digit-vector arithmetic modulo f, only used while building the tables.
  const auto encode = [&](const std::vector<std::uint32_t>& d) {
    std::uint64_t code = 0;
    for (std::size_t k = e_; k-- > 0;) code = code * p_ + d[k];
    return static_cast<std::uint32_t>(code);
  };
  const auto mul_digits = [&](const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    for (std::size_t i = 0; i < e_; ++i)
      for (std::size_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p_;
    for (std::size_t k = prod.size(); k-- > e_;) {
      const std::uint64_t top = prod[k];
      if (top == 0) continue;
      for (std::size_t j = 0; j < e_; ++j) prod[k - e_ + j] = (prod[k - e_ + j] + (p_ - modulus_[j]) * top) % p_;
      prod[k] = 0;
    }
    std::vector<std::uint32_t> out(e_);
    for (std::size_t i = 0; i < e_; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return out;
  };

  const std::uint64_t order = q_ - 1;
  std::vector<std::uint32_t> one_digits(e_, 0);
  one_digits[0] = 1;
  for (std::uint64_t candidate = 2; candidate < q_; ++candidate) {
    const std::vector<std::uint32_t> g = digits(static_cast<Elem>(candidate));
    exp_.assign(order, 0);
    std::vector<std::uint32_t> cur = one_digits;
    bool primitive = true;
    for (std::uint64_t i = 0; i < order; ++i) {
      const std::uint32_t code = encode(cur);
      if (i > 0 && code == 1) {
        primitive = false;
        break;
      }
      exp_[i] = code;
      cur = mul_digits(cur, g);
    }
    if (primitive) break;
  }

  log_.assign(q_, 0);
  for (std::uint64_t i = 0; i < order; ++i) log_[exp_[i]] = static_cast<std::uint32_t>(i);
  log_minus_one_ = log_[from_int(-1)];

  // zech_[n] = log(1 + g^n), using digit-wise addition of the constant 1.
  zech_.assign(order, static_cast<std::uint32_t>(order));
  for (std::uint64_t n = 0; n < order; ++n) {
    std::vector<std::uint32_t> d = digits(exp_[n]);
    d[0] = (d[0] + 1) % p_;
    const std::uint32_t code = encode(d);
    zech_[n] = code == 0 ? static_cast<std::uint32_t>(order) : log_[code];
  }
}

SmallField::Elem SmallField::from_int(std::int64_t v) const noexcept {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

SmallField::Elem SmallField::add(Elem a, Elem b) const noexcept {
  if (log_.empty()) {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Elem>(s >= p_ ? s - p_ : s);
  }
  if (a == 0) return b;
  if (b == 0) return a;
  const std::uint64_t order = q_ - 1;
  const std::uint64_t la = log_[a];
  const std::uint64_t lb = log_[b];
  const std::uint32_t z = zech_[(lb + order - la) % order];
  if (z == order) return 0;
  return exp_[(la + z) % order];
}

SmallField::Elem SmallField::neg(Elem a) const noexcept {
  if (a == 0) return 0;
  if (log_.empty()) return p_ - a;
  return exp_[(std::uint64_t{log_[a]} + log_minus_one_) % (q_ - 1)];
}

SmallField::Elem SmallField::mul(Elem a, Elem b) const noexcept {
  if (log_.empty()) return static_cast<Elem>(std::uint64_t{a} * b % p_);
  if (a == 0 || b == 0) return 0;
  return exp_[(std::uint64_t{log_[a]} + log_[b]) % (q_ - 1)];
}

SmallField::Elem SmallField::inv(Elem a) const {
  if (a == 0) fail(Errc::division_by_zero, "inverse of zero in F_q");
  if (log_.empty()) return pow(a, p_ - 2);
  const std::uint64_t order = q_ - 1;
  return exp_[(order - log_[a]) % order];
}

SmallField::Elem SmallField::pow(Elem a, std::uint64_t k) const noexcept {
  Elem acc = 1;
  while (k > 0) {
    if (k & 1) acc = mul(acc, a);
    k >>= 1;
    if (k > 0) a = mul(a, a);
  }
  return acc;
}

SmallField::Elem SmallField::dot(std::span<const Elem> a, std::span<const Elem> b) const noexcept {
  if (log_.empty()) return kernels::dot_mod(a, b, p_);
  Elem acc = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) acc = add(acc, mul(a[i], b[i]));
  return acc;
}

std::vector<std::uint32_t> SmallField::digits(Elem a) const {
  std::vector<std::uint32_t> out(e_, 0);
  for (std::size_t k = 0; k < e_; ++k) {
    out[k] = a % p_;
    a /= p_;
  }
  return out;
}

SmallField::Elem SmallField::from_digits(std::span<const std::uint32_t> d) const {
  // Reduce digits beyond e through y^e = -sum f_k y^k.
  std::vector<std::uint64_t> work(d.begin(), d.end());
  for (auto& v : work) v %= p_;
  for (std::size_t k = work.size(); k-- > e_;) {
    const std::uint64_t top = work[k];
    if (top == 0) continue;
    for (std::size_t j = 0; j < e_; ++j) work[k - e_ + j] = (work[k - e_ + j] + (p_ - modulus_[j]) * top) % p_;
    work[k] = 0;
  }
  std::uint64_t code = 0;
  for (std::size_t k = e_; k-- > 0;) code = code * p_ + (k < work.size() ? work[k] : 0);
  return static_cast<Elem>(code);
}

}  // namespace drinfeld
