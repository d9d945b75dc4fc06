#include "drinfeld/errors.hpp"

namespace drinfeld {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::not_prime: return "NotPrime";
    case Errc::reducible_modulus: return "ReducibleModulus";
    case Errc::non_monic_modulus: return "NonMonicModulus";
    case Errc::field_too_large: return "FieldTooLarge";
    case Errc::duplicate_abscissa: return "DuplicateAbscissa";
    case Errc::not_square: return "NotSquare";
    case Errc::insufficient_points: return "InsufficientPoints";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::tower_mismatch: return "TowerMismatch";
    case Errc::zero_polynomial: return "ZeroPolynomial";
    case Errc::zero_leading_coefficient: return "ZeroLeadingCoefficient";
    case Errc::rank_zero: return "RankZero";
    case Errc::gamma_mismatch: return "GammaMismatch";
    case Errc::not_a_morphism: return "NotAMorphism";
    case Errc::not_endomorphism: return "NotEndomorphism";
    case Errc::coefficient_not_rational: return "CoefficientNotRational";
    case Errc::zero_isogeny: return "ZeroIsogeny";
    case Errc::non_periodic_coefficient: return "NonPeriodicCoefficient";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::no_candidate: return "NoCandidate";
    case Errc::multiple_candidates: return "MultipleCandidates";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace drinfeld
