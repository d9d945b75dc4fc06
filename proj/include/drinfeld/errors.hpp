#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace drinfeld {

enum class Errc {
  not_prime,
  reducible_modulus,
  non_monic_modulus,
  field_too_large,
  duplicate_abscissa,
  not_square,
  insufficient_points,
  division_by_zero,
  tower_mismatch,
  zero_polynomial,
  zero_leading_coefficient,
  rank_zero,
  gamma_mismatch,
  not_a_morphism,
  not_endomorphism,
  coefficient_not_rational,
  zero_isogeny,
  non_periodic_coefficient,
  budget_exceeded,
  no_candidate,
  multiple_candidates,
  parse_error,
  invalid_argument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(Errc::parse_error, std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace drinfeld
