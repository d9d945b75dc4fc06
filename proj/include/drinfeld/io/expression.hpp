#pragma once

// Polynomial expressions: integer literals, identifiers, + - * ^ and
// parentheses. ^ binds tighter than unary minus, which binds tighter than *.
// Exponents are non-negative integer literals. No implicit multiplication.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "drinfeld/errors.hpp"

namespace drinfeld::io {

struct Expr {
  enum class Kind { integer, variable, add, sub, mul, pow, neg };
  Kind kind = Kind::integer;
  std::int64_t value = 0;  // integer literal, or exponent for pow
  std::string name;        // variable
  std::vector<Expr> args;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Parses a whole expression. `column` is the column of text[0] in the
/// source line, for error positions. Throws ParseError.
Expr parse_expression(std::string_view text, std::size_t line = 1, std::size_t column = 1);

/// Splits on top-level commas, keeping source columns.
struct Fragment {
  std::string_view text;
  std::size_t column = 1;
};
std::vector<Fragment> split_list(std::string_view text, std::size_t column = 1);

/// Evaluates e in an algebra providing Value, from_int, variable(name,
/// line, column), add, sub, mul, neg and pow(Value, uint64).
template <class Algebra>
typename Algebra::Value evaluate(const Expr& e, const Algebra& alg) {
  switch (e.kind) {
    case Expr::Kind::integer: return alg.from_int(e.value);
    case Expr::Kind::variable: return alg.variable(e.name, e.line, e.column);
    case Expr::Kind::add: return alg.add(evaluate(e.args[0], alg), evaluate(e.args[1], alg));
    case Expr::Kind::sub: return alg.sub(evaluate(e.args[0], alg), evaluate(e.args[1], alg));
    case Expr::Kind::mul: return alg.mul(evaluate(e.args[0], alg), evaluate(e.args[1], alg));
    case Expr::Kind::neg: return alg.neg(evaluate(e.args[0], alg));
    case Expr::Kind::pow: return alg.pow(evaluate(e.args[0], alg), static_cast<std::uint64_t>(e.value));
  }
  throw ParseError(e.line, e.column, "unknown expression node");
}

}  // namespace drinfeld::io
