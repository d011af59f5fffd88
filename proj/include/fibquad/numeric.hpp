#pragma once

/**
 * @file numeric.hpp
 * @brief Exact integer and rational arithmetic.
 *
 * Int is an arbitrary-precision signed integer (GMP). Rat is a reduced
 * fraction over Int:
 * - denominator always positive, sign carried by the numerator
 * - gcd(|num|, den) == 1 after every operation, so equality is structural
 * - zero is uniquely 0/1
 *
 * Avoid `auto` on Int expressions: gmpxx returns expression templates that
 * may reference temporaries.
 */

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace fibquad {

using Int = mpz_class;

/// Non-negative gcd; gcd(0, 0) == 0.
Int gcd(const Int& x, const Int& y);

/// r with r*r == x, or nullopt when x is not a perfect square. Throws NegativeInput for x < 0.
std::optional<Int> isqrt_exact(const Int& x);

Int pow(const Int& base, unsigned long exponent);

std::string to_string(const Int& x);

class Rat {
 public:
  Rat() : num_(0), den_(1) {}
  Rat(const Int& n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rat(long n) : num_(n), den_(1) {}        // NOLINT(google-explicit-constructor)
  Rat(const Int& n, const Int& d);

  const Int& num() const { return num_; }
  const Int& den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return sgn(num_); }

  /// Lossless conversion; throws NotAnInteger when den != 1.
  Int to_int() const;
  double to_double() const;

  /// "num/den", always with the slash.
  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b);

 private:
  struct Canonical {};
  Rat(Int n, Int d, Canonical) : num_(std::move(n)), den_(std::move(d)) {}
  void reduce();

  Int num_;
  Int den_;
};

Rat abs(const Rat& x);

std::ostream& operator<<(std::ostream& os, const Rat& x);

/// Factory mirroring the constructor; throws ZeroDenominator when den == 0.
inline Rat rat(const Int& num, const Int& den) { return Rat(num, den); }

}  // namespace fibquad
