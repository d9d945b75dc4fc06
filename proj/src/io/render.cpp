#include "drinfeld/io/render.hpp"

#include <vector>

namespace drinfeld::io {

namespace {

std::string power(std::string_view var, std::size_t k) {
  if (k == 0) return "";
  std::string out(var);
  if (k > 1) out += "^" + std::to_string(k);
  return out;
}

bool is_atomic(const std::string& s) { return s.find(' ') == std::string::npos; }

/// Joins c_k*var^k for nonzero c_k, descending; coeffs[k] is empty for zero.
std::string join_terms(const std::vector<std::string>& coeffs, std::string_view var) {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const std::string& c = coeffs[k];
    if (c.empty()) continue;
    if (!out.empty()) out += " + ";
    if (k == 0) {
      out += c;
    } else if (c == "1") {
      out += power(var, k);
    } else {
      out += (is_atomic(c) ? c : "(" + c + ")") + "*" + power(var, k);
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string render_fq(const Fq& fq, FqElem c) {
  if (fq.is_prime_field()) return std::to_string(c);
  const auto digits = fq.digits(c);
  std::vector<std::string> terms(digits.size());
  for (std::size_t k = 0; k < digits.size(); ++k)
    if (digits[k] != 0) terms[k] = std::to_string(digits[k]);
  return join_terms(terms, "y");
}

std::string render_fq_poly(const Fq& fq, const FqPoly& p, std::string_view var) {
  std::vector<std::string> terms(p.c.size());
  for (std::size_t k = 0; k < p.c.size(); ++k)
    if (!fq.is_zero(p.c[k])) terms[k] = render_fq(fq, p.c[k]);
  return join_terms(terms, var);
}

std::string render_k(const FieldTower& tower, const KElem& a) {
  return render_fq_poly(tower.fq(), PolyRing<Fq>(tower.fq()).normalize(a), "x");
}

std::string render_charpoly(const FieldTower& tower, const CharPoly& pi) {
  const Fq& fq = tower.fq();
  std::string out;
  for (std::size_t j = pi.coeffs.size(); j-- > 0;) {
    const FqPoly& c = pi.coeffs[j];
    if (c.c.empty()) continue;
    if (!out.empty()) out += " + ";
    const bool unit_one = c.c.size() == 1 && c.c[0] == fq.one();
    if (j > 0 && unit_one) {
      out += power("X", j);
      continue;
    }
    out += "(" + render_fq_poly(fq, c, "T") + ")";
    if (j > 0) out += "*" + power("X", j);
  }
  return out.empty() ? "0" : out;
}

std::string render_norm(const FieldTower& tower, const NormIdeal& n) {
  return "(" + render_fq_poly(tower.fq(), n.generator, "T") + ")";
}

std::string render_ore(const OrePoly& f) {
  std::vector<std::string> terms(f.coeffs().size());
  for (std::size_t k = 0; k < terms.size(); ++k)
    if (!f.tower()->k().is_zero(f.coeffs()[k])) terms[k] = render_k(*f.tower(), f.coeffs()[k]);
  return join_terms(terms, "tau");
}

}  // namespace drinfeld::io
