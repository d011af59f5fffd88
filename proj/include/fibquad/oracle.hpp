#pragma once

// Independent checking paths. Nothing here calls the solver, the
// antiderivative or Horner evaluation from quadratic.cpp, so a bug there
// cannot confirm itself.

#include <vector>

#include "fibquad/numeric.hpp"
#include "fibquad/quadratic.hpp"
#include "fibquad/triples.hpp"

namespace fibquad {

/// Simpson's rule in exact rationals; exact for any polynomial of degree <= 3.
Rat simpson_exact(const QuadPoly& q, const Rat& lo, const Rat& hi);

/// True iff q(r) == 0 exactly.
bool root_check(const QuadPoly& q, const Rat& r);

/// Every Pythagorean triple with hypotenuse <= hyp_max, by exhaustive scan over
/// (leg, hyp). Both leg orders are listed. Throws RangeExceeded above 10^6.
std::vector<Triple> enumerate_triples(const Int& hyp_max);

}  // namespace fibquad
