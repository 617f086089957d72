#pragma once

#include "jimm/continued_fraction.hpp"
#include "jimm/mobius.hpp"
#include "jimm/surd.hpp"

namespace jimm {

inline constexpr size_t kDefaultMaxTerms = 100000;

// Eventually periodic expansion of a real quadratic irrational, by the
// (P_k + sqrt(D))/Q_k state recurrence with repetition detection on (P, Q).
// Negative values are returned with the S prefix (expansion of -1/x).
// Throws PeriodNotFound if no state repeats within max_terms.
ContinuedFraction cf_of_surd(const QuadraticSurd& x, size_t max_terms = kDefaultMaxTerms);
ContinuedFraction cf_of_quadstate(QuadState st, size_t max_terms = kDefaultMaxTerms);

// Value of a Periodic expansion as an unreduced (P + sqrt(D))/Q: the period
// word's Möbius fixed point (the attracting root), pushed through the
// preperiod and the S prefix. The period quadratic is reduced by the gcd of
// its coefficients, so desk-scale inputs stay desk scale.
QuadState quadstate_of_periodic_cf(const ContinuedFraction& cf);

// Canonical form of the above (factors the discriminant's square part).
QuadraticSurd surd_of_periodic_cf(const ContinuedFraction& cf);

// Möbius product of a block of partial quotients: prod [[t,1],[1,0]].
MobiusMap mobius_of_terms(const std::vector<Int>& terms);

}  // namespace jimm
