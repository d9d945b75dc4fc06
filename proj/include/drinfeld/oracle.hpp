#pragma once

#include <cstdint>

#include "drinfeld/frobenius.hpp"

namespace drinfeld {

/// sum_i φ_(π_i) u^i in K{τ}; zero iff π annihilates u. Throws not_endomorphism.
OrePoly cayley_hamilton_residue(const Morphism& u, const CharPoly& pi);

/// Same residue for u = τ^d without building a Morphism.
OrePoly frobenius_residue(const DrinfeldModule& phi, const CharPoly& pi);

inline constexpr std::uint64_t kDefaultTraceBudget = 100000;

/// Rank-2 Frobenius charpoly X^2 - tX + π_0 by exhaustive search over all t
/// with deg t <= d/2, π_0 taken from the norm formula.
/// Throws invalid_argument (rank != 2), budget_exceeded, no_candidate,
/// multiple_candidates.
CharPoly rank2_trace_exhaustive(const DrinfeldModule& phi, std::uint64_t budget = kDefaultTraceBudget);

}  // namespace drinfeld
