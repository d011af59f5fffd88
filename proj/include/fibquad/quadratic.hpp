#pragma once

/**
 * @file quadratic.hpp
 * @brief Integer quadratics built from Pythagorean triples.
 *
 * For a triple (leg, other, hyp) the polynomial
 *
 *     leg*x^2 + 2*leg*hyp*x + leg^3
 *
 * has discriminant (2*leg*other)^2, hence the integer roots -hyp +/- other,
 * its vertex at (-hyp, -leg*other^2), and a root-to-root integral of
 * -(4/3)*leg*other^3. The negative orientation is the mirror image
 * q~(x) = -q(-x), which negates roots, vertex and integral.
 */

#include <optional>

#include "fibquad/numeric.hpp"

namespace fibquad {

// y = a x^2 + b x + c, a != 0.
class QuadPoly {
 public:
  /// Throws ZeroLeading when a == 0.
  QuadPoly(Int a, Int b, Int c);

  const Int& a() const { return a_; }
  const Int& b() const { return b_; }
  const Int& c() const { return c_; }

  Int discriminant() const;

  friend bool operator==(const QuadPoly&, const QuadPoly&) = default;

 private:
  Int a_;
  Int b_;
  Int c_;
};

enum class Orientation { positive, negative };

enum class RootKind { two_distinct, double_root, irrational_or_complex };

const char* to_string(RootKind kind);

// x1 >= x2 (x1 is the right root). Both are zero and meaningless when
// kind == irrational_or_complex.
struct RootPair {
  Rat x1;
  Rat x2;
  RootKind kind = RootKind::irrational_or_complex;

  bool rational() const { return kind != RootKind::irrational_or_complex; }

  friend bool operator==(const RootPair&, const RootPair&) = default;
};

struct Linear {
  Int slope;
  Int intercept;
};

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

// Per-term pieces of a definite integral: quadratic, linear and constant term.
struct IntegralBreakdown {
  Rat p1;
  Rat p2;
  Rat p3;

  Rat total() const { return p1 + p2 + p3; }
};

struct AnalysisReport {
  QuadPoly poly;
  RootPair roots;
  Point vertex;
  Int discriminant;
  // Root-to-root integral from x2 to x1; absent unless the roots are rational.
  std::optional<Rat> integral_signed;
  std::optional<Rat> integral_abs;
  std::optional<IntegralBreakdown> breakdown;
};

/// Requires 0 < leg < hyp (BadOrder) and hyp^2 - leg^2 a perfect square (NotATripleLeg).
QuadPoly build_quadratic(const Int& leg, const Int& hyp, Orientation orientation);

/// Exact rational roots when the discriminant is a perfect square.
RootPair solve_quadratic(const QuadPoly& q);

/// (-hyp + other, -hyp - other) straight from the triple. Throws NotPythagorean.
RootPair roots_via_triple(const Int& leg, const Int& other, const Int& hyp);

/// q'(x) = 2a x + b.
Linear derivative(const QuadPoly& q);

Point vertex(const QuadPoly& q);

Rat evaluate(const QuadPoly& q, const Rat& x);

/// Definite integral from lo to hi via the antiderivative (a/3)x^3 + (b/2)x^2 + cx.
Rat integrate(const QuadPoly& q, const Rat& lo, const Rat& hi);

IntegralBreakdown integral_breakdown(const QuadPoly& q, const Rat& lo, const Rat& hi);

AnalysisReport analyze(const QuadPoly& q);

}  // namespace fibquad
