#pragma once

#include "fibquad/fibonacci.hpp"
#include "fibquad/numeric.hpp"

namespace fibquad {

/**
 * A Pythagorean triple leg_a^2 + leg_b^2 == hyp^2 with all sides positive.
 *
 * Legs keep their generation order: the quadratic construction seeds on one
 * specific leg, so (3, 4, 5) and (4, 3, 5) are different triples here.
 */
class Triple {
 public:
  /// Throws NotPythagorean unless the sides are positive and satisfy the identity.
  Triple(Int leg_a, Int leg_b, Int hyp);

  const Int& leg_a() const { return leg_a_; }
  const Int& leg_b() const { return leg_b_; }
  const Int& hyp() const { return hyp_; }

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  Int leg_a_;
  Int leg_b_;
  Int hyp_;
};

bool is_pythagorean(const Int& a, const Int& b, const Int& c);

/// (F(i)F(i+3), 2F(i+1)F(i+2), F(i+1)^2 + F(i+2)^2). Throws DegenerateWindow for i == 0.
Triple triple_from_window(const FibWindow& w);

struct Primitivity {
  bool is_primitive;
  Int g;
};

/// Measured gcd of the three sides. Windows do not always give primitive
/// triples: i = 3 yields (16, 30, 34) with gcd 2.
Primitivity primitivity(const Triple& t);

/// Throws BadScale when k < 1.
Triple scale(const Triple& t, const Int& k);

}  // namespace fibquad
