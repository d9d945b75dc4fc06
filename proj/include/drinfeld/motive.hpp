#pragma once

// The Anderson motive M(φ) = K{τ} as a K[T]-module through T·f = f φ_T,
// free with basis (1, τ, ..., τ^(r-1)).

#include <cstddef>
#include <cstdint>
#include <vector>

#include "drinfeld/drinfeld_module.hpp"
#include "drinfeld/poly_matrix.hpp"

namespace drinfeld {

/// Coordinates (f_0, ..., f_(r-1)) in K[T].
using CoordinateVector = std::vector<KPoly>;

/// π_0 + π_1 X + ... + π_r X^r over F_q[T], π_r = 1.
struct CharPoly {
  std::vector<FqPoly> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  bool operator==(const CharPoly&) const = default;
};

/// Monic generator of an ideal of F_q[T].
struct NormIdeal {
  FqPoly generator;

  bool operator==(const NormIdeal&) const = default;
};

/// Coordinates of f in the canonical basis, by recursive right division by powers of φ_T.
CoordinateVector motive_coordinates(const DrinfeldModule& phi, const OrePoly& f);

/// Coordinates of τf from those of f.
CoordinateVector motive_tau_action(const DrinfeldModule& phi, const CoordinateVector& v);

/// r×r matrix over K[T] whose column j holds the coordinates of τ^j u in M(φ).
PolyMatrix<KElem> motive_matrix(const DrinfeldModule& phi, const OrePoly& u);
PolyMatrix<KElem> motive_matrix(const Morphism& u);

/// Characteristic polynomial of an endomorphism. Throws not_endomorphism,
/// coefficient_not_rational.
CharPoly endomorphism_charpoly(const Morphism& u, Strategy strategy = Strategy::division_free);

/// Norm of an isogeny as the monic generator of (det M(u)). Throws
/// zero_isogeny, coefficient_not_rational.
NormIdeal isogeny_norm(const Morphism& u, Strategy strategy = Strategy::division_free);

/// Degree bounds on coordinates of an element of τ-degree n:
/// f_i = 0 when n < i, else deg f_i <= (n - i)/r.
bool coordinates_within_bounds(std::ptrdiff_t n, std::size_t rank, const CoordinateVector& v);

/// Entry bounds deg P_ij <= (n + j - i)/r, P_ij = 0 when n + j < i.
bool motive_matrix_within_bounds(std::ptrdiff_t n, const PolyMatrix<KElem>& m);

/// Converts K[T] coefficients known to lie in F_q[T]. Throws coefficient_not_rational.
FqPoly to_fq_poly(const FieldTower& tower, const KPoly& p);
KPoly to_k_poly(const FieldTower& tower, const FqPoly& p);

}  // namespace drinfeld
