#pragma once

// Text forms: descending degree, one space around binary +, '*' between a
// coefficient and its variable, multi-term coefficients parenthesized.

#include <string>
#include <string_view>

#include "drinfeld/motive.hpp"

namespace drinfeld::io {

/// Integer when q = p, otherwise a polynomial in y.
std::string render_fq(const Fq& fq, FqElem c);
std::string render_fq_poly(const Fq& fq, const FqPoly& p, std::string_view var);
/// Polynomial in x (and y when e > 1).
std::string render_k(const FieldTower& tower, const KElem& a);
/// `X^2 + (T + 2)*X + (T^2 + 1)`
std::string render_charpoly(const FieldTower& tower, const CharPoly& pi);
/// `(T^2)`
std::string render_norm(const FieldTower& tower, const NormIdeal& n);
std::string render_ore(const OrePoly& f);

}  // namespace drinfeld::io
