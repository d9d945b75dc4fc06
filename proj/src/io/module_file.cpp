#include "drinfeld/io/module_file.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "drinfeld/io/expression.hpp"
#include "drinfeld/io/render.hpp"

namespace drinfeld::io {

namespace {

struct Entry {
  std::string_view value;
  std::size_t line = 1;
  std::size_t column = 1;
};

std::map<std::string, Entry, std::less<>> read_entries(std::string_view text, std::size_t& last_line) {
  std::map<std::string, Entry, std::less<>> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    const auto eq = line.find('=');
    const std::size_t key_begin = line.find_first_not_of(" \t");
    if (eq == std::string_view::npos) throw ParseError(line_no, key_begin + 1, "expected 'key = value'");
    std::string_view key = line.substr(key_begin, eq - key_begin);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.remove_suffix(1);
    if (key.empty()) throw ParseError(line_no, eq + 1, "missing key");
    if (out.count(key)) throw ParseError(line_no, key_begin + 1, "duplicate key '" + std::string(key) + "'");
    out.emplace(std::string(key), Entry{line.substr(eq + 1), line_no, eq + 2});
  }
  last_line = line_no;
  return out;
}

[[noreturn]] void unknown_variable(const std::string& name, std::size_t line, std::size_t column) {
  throw ParseError(line, column, "unknown variable '" + name + "'");
}

struct PrimePolyAlgebra {
  using Value = Poly<SmallField::Elem>;
  const SmallField& fp;
  PolyRing<SmallField> ring{fp};
  Value from_int(std::int64_t v) const { return ring.constant(fp.from_int(v)); }
  Value variable(const std::string& name, std::size_t line, std::size_t column) const {
    if (name != "y") unknown_variable(name, line, column);
    return ring.variable();
  }
  Value add(const Value& a, const Value& b) const { return ring.add(a, b); }
  Value sub(const Value& a, const Value& b) const { return ring.sub(a, b); }
  Value mul(const Value& a, const Value& b) const { return ring.mul(a, b); }
  Value neg(const Value& a) const { return ring.neg(a); }
  Value pow(const Value& a, std::uint64_t k) const { return ring.pow(a, k); }
};

/// F_q[x]; y is the generator of F_q when q > p.
struct FqPolyAlgebra {
  using Value = FqPoly;
  const Fq& fq;
  PolyRing<Fq> ring{fq};
  Value from_int(std::int64_t v) const { return ring.constant(fq.from_int(v)); }
  Value variable(const std::string& name, std::size_t line, std::size_t column) const {
    if (name == "x") return ring.variable();
    if (name == "y" && !fq.is_prime_field()) return ring.constant(fq.generator());
    unknown_variable(name, line, column);
  }
  Value add(const Value& a, const Value& b) const { return ring.add(a, b); }
  Value sub(const Value& a, const Value& b) const { return ring.sub(a, b); }
  Value mul(const Value& a, const Value& b) const { return ring.mul(a, b); }
  Value neg(const Value& a) const { return ring.neg(a); }
  Value pow(const Value& a, std::uint64_t k) const { return ring.pow(a, k); }
};

struct OreAlgebra {
  using Value = OrePoly;
  std::shared_ptr<const FieldTower> tower;
  Value from_int(std::int64_t v) const { return OrePoly::constant(tower, tower->from_fq(tower->fq().from_int(v))); }
  Value variable(const std::string& name, std::size_t line, std::size_t column) const {
    if (name == "tau") return OrePoly::tau(tower);
    if (name == "x") return OrePoly::constant(tower, tower->k().generator());
    if (name == "y" && !tower->fq().is_prime_field())
      return OrePoly::constant(tower, tower->from_fq(tower->fq().generator()));
    unknown_variable(name, line, column);
  }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value sub(const Value& a, const Value& b) const { return a - b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value neg(const Value& a) const { return -a; }
  Value pow(const Value& a, std::uint64_t k) const { return drinfeld::pow(a, k); }
};

template <class Algebra>
typename Algebra::Value eval_entry(const Entry& e, const Algebra& alg) {
  return evaluate(parse_expression(e.value, e.line, e.column), alg);
}

const Entry& require(const std::map<std::string, Entry, std::less<>>& entries, std::string_view key,
                     std::size_t last_line) {
  const auto it = entries.find(key);
  if (it == entries.end()) throw ParseError(last_line + 1, 1, "missing key '" + std::string(key) + "'");
  return it->second;
}

std::uint32_t parse_characteristic(const Entry& e) {
  const Expr expr = parse_expression(e.value, e.line, e.column);
  if (expr.kind != Expr::Kind::integer || expr.value >= (std::int64_t{1} << 31))
    throw ParseError(expr.line, expr.column, "p must be an integer literal below 2^31");
  return static_cast<std::uint32_t>(expr.value);
}

KElem to_k(const FieldTower& tower, const FqPoly& p) { return tower.k().from_coeffs(p.c); }

}  // namespace

DrinfeldModule parse_module(std::string_view text) {
  std::size_t last_line = 0;
  const auto entries = read_entries(text, last_line);
  for (const auto& [key, e] : entries)
    if (key != "p" && key != "fq_modulus" && key != "k_modulus" && key != "gamma" && key != "phi")
      throw ParseError(e.line, 1, "unknown key '" + key + "'");

  const std::uint32_t p = parse_characteristic(require(entries, "p", last_line));
  const SmallField fp(p);
  std::optional<std::vector<std::uint32_t>> fq_modulus;
  std::optional<SmallField> fq;
  if (const auto it = entries.find("fq_modulus"); it != entries.end()) {
    fq_modulus = eval_entry(it->second, PrimePolyAlgebra{fp}).c;
    fq.emplace(p, *fq_modulus);
  } else {
    fq.emplace(p);
  }

  const FqPolyAlgebra fq_alg{*fq};
  const FqPoly k_modulus = eval_entry(require(entries, "k_modulus", last_line), fq_alg);
  const auto tower = FieldTower::build(p, fq_modulus, k_modulus.c);

  const Entry& phi_entry = require(entries, "phi", last_line);
  std::vector<KElem> g;
  for (const auto& frag : split_list(phi_entry.value, phi_entry.column))
    g.push_back(to_k(*tower, evaluate(parse_expression(frag.text, phi_entry.line, frag.column), fq_alg)));

  if (const auto it = entries.find("gamma"); it != entries.end()) {
    const KElem gamma = to_k(*tower, eval_entry(it->second, fq_alg));
    if (gamma != g.front()) fail(Errc::gamma_mismatch, "gamma differs from the constant coefficient of phi_T");
  }
  return DrinfeldModule(tower, std::move(g));
}

OrePoly parse_ore(std::string_view text, std::shared_ptr<const FieldTower> tower) {
  std::size_t last_line = 0;
  const auto entries = read_entries(text, last_line);
  for (const auto& [key, e] : entries)
    if (key != "ore") throw ParseError(e.line, 1, "unknown key '" + key + "'");
  return eval_entry(require(entries, "ore", last_line), OreAlgebra{std::move(tower)});
}

std::string render_module(const DrinfeldModule& phi) {
  const FieldTower& t = *phi.tower();
  const Fq& fq = t.fq();
  std::ostringstream out;
  out << "p = " << t.p() << '\n';
  if (!fq.is_prime_field()) {
    out << "fq_modulus = " << render_fq_poly(SmallField(t.p()), FqPoly{fq.modulus()}, "y") << '\n';
  }
  out << "k_modulus = " << render_fq_poly(fq, FqPoly{t.k().modulus()}, "x") << '\n';
  out << "gamma = " << render_k(t, phi.gamma()) << '\n';
  out << "phi = ";
  for (std::size_t i = 0; i < phi.coefficients().size(); ++i) out << (i ? ", " : "") << render_k(t, phi.coefficients()[i]);
  out << '\n';
  return out.str();
}

std::string render_ore_file(const OrePoly& f) { return "ore = " + render_ore(f) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::invalid_argument, "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace drinfeld::io
