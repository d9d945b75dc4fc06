#include "drinfeld/io/expression.hpp"

#include <cctype>
#include <limits>

namespace drinfeld::io {

namespace {

struct Token {
  enum class Kind { integer, ident, op, lparen, rparen, end };
  Kind kind = Kind::end;
  std::string_view text;
  std::size_t column = 1;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t line, std::size_t column) : text_(text), line_(line), base_(column) {
    advance();
  }

  Expr parse() {
    Expr e = parse_binary(1);
    if (tok_.kind != Token::Kind::end) error(tok_.column, "unexpected '" + std::string(tok_.text) + "'");
    return e;
  }

 private:
  [[noreturn]] void error(std::size_t column, const std::string& msg) const { throw ParseError(line_, column, msg); }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    tok_.column = base_ + pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Token::Kind::end, {}, base_ + pos_};
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      tok_.kind = Token::Kind::integer;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
      tok_.kind = Token::Kind::ident;
    } else if (c == '+' || c == '-' || c == '*' || c == '^') {
      ++pos_;
      tok_.kind = Token::Kind::op;
    } else if (c == '(') {
      ++pos_;
      tok_.kind = Token::Kind::lparen;
    } else if (c == ')') {
      ++pos_;
      tok_.kind = Token::Kind::rparen;
    } else {
      error(base_ + pos_, std::string("unexpected character '") + c + "'");
    }
    tok_.text = text_.substr(start, pos_ - start);
  }

  static int precedence(std::string_view op) {
    if (op == "+" || op == "-") return 1;
    if (op == "*") return 2;
    return -1;
  }

  std::int64_t parse_integer(const Token& t) const {
    std::int64_t v = 0;
    for (char c : t.text) {
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) error(t.column, "integer literal too large");
      v = v * 10 + (c - '0');
    }
    return v;
  }

  Expr node(Expr::Kind kind, std::size_t column) const {
    Expr e;
    e.kind = kind;
    e.line = line_;
    e.column = column;
    return e;
  }

  Expr parse_binary(int min_prec) {
    Expr lhs = parse_unary();
    while (tok_.kind == Token::Kind::op) {
      const int prec = precedence(tok_.text);
      if (prec < 0) error(tok_.column, "unexpected '" + std::string(tok_.text) + "'");
      if (prec < min_prec) break;
      const Token op = tok_;
      advance();
      Expr rhs = parse_binary(prec + 1);
      Expr e = node(op.text == "+" ? Expr::Kind::add : op.text == "-" ? Expr::Kind::sub : Expr::Kind::mul, op.column);
      e.args.push_back(std::move(lhs));
      e.args.push_back(std::move(rhs));
      lhs = std::move(e);
    }
    return lhs;
  }

  Expr parse_unary() {
    if (tok_.kind == Token::Kind::op && tok_.text == "-") {
      const std::size_t column = tok_.column;
      advance();
      Expr e = node(Expr::Kind::neg, column);
      e.args.push_back(parse_unary());
      return e;
    }
    return parse_power();
  }

  Expr parse_power() {
    Expr base = parse_primary();
    if (tok_.kind == Token::Kind::op && tok_.text == "^") {
      const std::size_t column = tok_.column;
      advance();
      if (tok_.kind != Token::Kind::integer) error(tok_.column, "exponent must be a non-negative integer literal");
      Expr e = node(Expr::Kind::pow, column);
      e.value = parse_integer(tok_);
      advance();
      e.args.push_back(std::move(base));
      if (tok_.kind == Token::Kind::op && tok_.text == "^") error(tok_.column, "chained exponent needs parentheses");
      return e;
    }
    return base;
  }

  Expr parse_primary() {
    switch (tok_.kind) {
      case Token::Kind::integer: {
        Expr e = node(Expr::Kind::integer, tok_.column);
        e.value = parse_integer(tok_);
        advance();
        return e;
      }
      case Token::Kind::ident: {
        Expr e = node(Expr::Kind::variable, tok_.column);
        e.name = std::string(tok_.text);
        advance();
        return e;
      }
      case Token::Kind::lparen: {
        const std::size_t column = tok_.column;
        advance();
        Expr e = parse_binary(1);
        if (tok_.kind != Token::Kind::rparen) error(tok_.kind == Token::Kind::end ? column : tok_.column, "unbalanced '('");
        advance();
        return e;
      }
      case Token::Kind::end: error(tok_.column, "unexpected end of expression");
      default: error(tok_.column, "unexpected '" + std::string(tok_.text) + "'");
    }
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t base_;
  std::size_t pos_ = 0;
  Token tok_;
};

}  // namespace

Expr parse_expression(std::string_view text, std::size_t line, std::size_t column) {
  return Parser(text, line, column).parse();
}

std::vector<Fragment> split_list(std::string_view text, std::size_t column) {
  std::vector<Fragment> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back({text.substr(start, i - start), column + start});
      start = i + 1;
    }
  }
  return out;
}

}  // namespace drinfeld::io
