#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "drinfeld/motive.hpp"

namespace drinfeld {

enum class Method { mff, mku, csa, automatic };

std::string_view method_name(Method m) noexcept;
/// Accepts "mff", "mku", "csa", "auto".
std::optional<Method> parse_method(std::string_view name) noexcept;

/// M_s, the matrix of f ↦ τ^s f on M(φ) (column j = coordinates of
/// τ^(j+s)), together with the matrix of a ↦ a^(q^s) on K.
struct SemilinearPower {
  std::size_t s = 0;
  PolyMatrix<KElem> matrix;
  FqMatrix twist;
};

/// The companion matrix M_1 of the τ-action.
PolyMatrix<KElem> tau_companion_matrix(const DrinfeldModule& phi);

/// Entry-wise P ↦ P^(τ^s) using a precomputed twist matrix for a ↦ a^(q^s).
PolyMatrix<KElem> twist_entries(const FieldTower& tower, const PolyMatrix<KElem>& m, const FqMatrix& twist);

/// M_s by the square-and-multiply recurrences M_2s = M_s M_s^(τ^s) and
/// M_(2s+1) = M_1 M_s^τ M_s^(τ^(s+1)). Throws invalid_argument for s = 0.
SemilinearPower mku_matrix(const DrinfeldModule& phi, std::size_t s);

/// d×d matrix over F_q[t] of Q ↦ Q P on K[t; Frobenius], i.e.
/// sum_j F^(-j) G_j t^j with G_j the multiplication-by-p_j matrix.
PolyMatrix<FqElem> csa_matrix(const FieldTower& tower, const OrePoly& p);

/// Characteristic polynomial of the Frobenius endomorphism through the
/// reduced-norm route: charpoly of csa_matrix(φ_T), then the t^d ↔ T swap.
/// Throws non_periodic_coefficient on an internal inconsistency.
CharPoly frobenius_charpoly_csa(const DrinfeldModule& phi);

CharPoly frobenius_charpoly(const DrinfeldModule& phi, Method method = Method::automatic);

/// n(F_φ) = unit * p(T)^(d/m) with unit = (-1)^(rd-r-d) N_{K/F_q}(Δ)^(-1).
/// The scalar form equals the constant coefficient π_0 of the Frobenius
/// charpoly.
struct FrobeniusNorm {
  NormIdeal ideal;
  FqElem unit = 0;
};

FrobeniusNorm frobenius_norm_formula(const DrinfeldModule& phi);

/// Regime map for the cheapest variant at given (d, r, m):
/// csa if r >= d; mku if r >= d^0.44 or m <= d^0.5; mff otherwise.
Method select_method(std::size_t d, std::size_t r, std::size_t m) noexcept;

}  // namespace drinfeld
