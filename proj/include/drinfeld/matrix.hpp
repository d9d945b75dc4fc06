#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "drinfeld/errors.hpp"
#include "drinfeld/poly.hpp"

namespace drinfeld {

/// Dense row-major matrix of ring elements.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  E& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const E> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<E> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  const std::vector<E>& data() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <Ring R>
Matrix<typename R::Elem> identity_matrix(const R& r, std::size_t n) {
  Matrix<typename R::Elem> out(n, n, r.zero());
  for (std::size_t i = 0; i < n; ++i) out(i, i) = r.one();
  return out;
}

template <Ring R>
Matrix<typename R::Elem> mat_mul(const R& r, const Matrix<typename R::Elem>& a, const Matrix<typename R::Elem>& b) {
  if (a.cols() != b.rows()) fail(Errc::invalid_argument, "matrix product shape mismatch");
  Matrix<typename R::Elem> out(a.rows(), b.cols(), r.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (r.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = r.add(out(i, j), r.mul(aik, b(k, j)));
    }
  return out;
}

template <Ring R>
Matrix<typename R::Elem> mat_add(const R& r, const Matrix<typename R::Elem>& a, const Matrix<typename R::Elem>& b) {
  Matrix<typename R::Elem> out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = r.add(a(i, j), b(i, j));
  return out;
}

/// M * v, one dot product per row.
template <Ring R>
std::vector<typename R::Elem> mat_vec(const R& r, const Matrix<typename R::Elem>& m,
                                      std::span<const typename R::Elem> v) {
  std::vector<typename R::Elem> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = field_dot(r, m.row(i), v);
  return out;
}

template <class E, class Fn>
auto map_entries(const Matrix<E>& m, Fn&& fn) {
  using Out = std::decay_t<decltype(fn(std::declval<const E&>()))>;
  Matrix<Out> out(m.rows(), m.cols(), Out{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = fn(m(i, j));
  return out;
}

/// det(X*I - M) by Berkowitz's division-free recursion; ascending
/// coefficients, length n+1, leading coefficient one. Valid over any
/// commutative ring.
template <Ring R>
std::vector<typename R::Elem> berkowitz_charpoly(const R& r, const Matrix<typename R::Elem>& m) {
  using E = typename R::Elem;
  if (!m.is_square()) fail(Errc::not_square, "characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return {r.one()};

  // Descending coefficients of the charpoly of the leading k x k block.
  std::vector<E> c{r.one(), r.neg(m(0, 0))};
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<E> toeplitz{r.one(), r.neg(m(k, k))};
    std::vector<E> col(k);  // A^i * S, starting with S = M[0..k)[k]
    for (std::size_t i = 0; i < k; ++i) col[i] = m(i, k);
    for (std::size_t power = 0; power < k; ++power) {
      E acc = r.zero();
      for (std::size_t j = 0; j < k; ++j) acc = r.add(acc, r.mul(m(k, j), col[j]));
      toeplitz.push_back(r.neg(acc));
      if (power + 1 < k) {
        std::vector<E> next(k, r.zero());
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j)
            if (!r.is_zero(col[j])) next[i] = r.add(next[i], r.mul(m(i, j), col[j]));
        col = std::move(next);
      }
    }
    std::vector<E> next(k + 2, r.zero());
    for (std::size_t i = 0; i < k + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, k); ++j)
        next[i] = r.add(next[i], r.mul(toeplitz[i - j], c[j]));
    c = std::move(next);
  }
  return {c.rbegin(), c.rend()};
}

/// det(M) = (-1)^n * charpoly(0), division-free.
template <Ring R>
typename R::Elem berkowitz_det(const R& r, const Matrix<typename R::Elem>& m) {
  auto c = berkowitz_charpoly(r, m);
  return m.rows() % 2 == 0 ? c[0] : r.neg(c[0]);
}

/// det(X*I - M) over a field through reduction to upper Hessenberg form.
template <Field F>
std::vector<typename F::Elem> hessenberg_charpoly(const F& f, Matrix<typename F::Elem> h) {
  using E = typename F::Elem;
  if (!h.is_square()) fail(Errc::not_square, "characteristic polynomial of a non-square matrix");
  const std::size_t n = h.rows();

  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t pivot = m;
    while (pivot < n && f.is_zero(h(pivot, m - 1))) ++pivot;
    if (pivot == n) continue;
    if (pivot != m) {
      h.swap_rows(pivot, m);
      h.swap_cols(pivot, m);
    }
    const E inv = f.inv(h(m, m - 1));
    for (std::size_t i = m + 1; i < n; ++i) {
      if (f.is_zero(h(i, m - 1))) continue;
      const E u = f.mul(h(i, m - 1), inv);
      for (std::size_t j = 0; j < n; ++j) h(i, j) = f.sub(h(i, j), f.mul(u, h(m, j)));
      for (std::size_t j = 0; j < n; ++j) h(j, m) = f.add(h(j, m), f.mul(u, h(j, i)));
    }
  }

  // p_k = charpoly of the leading k x k block; ascending coefficients.
  std::vector<std::vector<E>> p(n + 1);
  p[0] = {f.one()};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<E> cur(k + 1, f.zero());
    const E diag = h(k - 1, k - 1);
    for (std::size_t i = 0; i < k; ++i) {
      cur[i + 1] = f.add(cur[i + 1], p[k - 1][i]);
      cur[i] = f.sub(cur[i], f.mul(diag, p[k - 1][i]));
    }
    E t = f.one();
    for (std::size_t i = 1; i < k; ++i) {
      t = f.mul(t, h(k - i, k - i - 1));
      const E factor = f.mul(h(k - i - 1, k - 1), t);
      if (f.is_zero(factor)) continue;
      for (std::size_t j = 0; j < p[k - i - 1].size(); ++j) cur[j] = f.sub(cur[j], f.mul(factor, p[k - i - 1][j]));
    }
    p[k] = std::move(cur);
  }
  return p[n];
}

/// Determinant over a field by Gaussian elimination.
template <Field F>
typename F::Elem gauss_det(const F& f, Matrix<typename F::Elem> a) {
  using E = typename F::Elem;
  if (!a.is_square()) fail(Errc::not_square, "determinant of a non-square matrix");
  const std::size_t n = a.rows();
  E det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && f.is_zero(a(pivot, col))) ++pivot;
    if (pivot == n) return f.zero();
    if (pivot != col) {
      a.swap_rows(pivot, col);
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    const E inv = f.inv(a(col, col));
    for (std::size_t i = col + 1; i < n; ++i) {
      if (f.is_zero(a(i, col))) continue;
      const E u = f.mul(a(i, col), inv);
      for (std::size_t j = col; j < n; ++j) a(i, j) = f.sub(a(i, j), f.mul(u, a(col, j)));
    }
  }
  return det;
}

}  // namespace drinfeld
