#include "fibquad/triples.hpp"

#include <string>

#include "fibquad/error.hpp"

namespace fibquad {

bool is_pythagorean(const Int& a, const Int& b, const Int& c) {
  if (sgn(a) <= 0 || sgn(b) <= 0 || sgn(c) <= 0) return false;
  return Int(a * a + b * b) == Int(c * c);
}

Triple::Triple(Int leg_a, Int leg_b, Int hyp)
    : leg_a_(std::move(leg_a)), leg_b_(std::move(leg_b)), hyp_(std::move(hyp)) {
  if (!is_pythagorean(leg_a_, leg_b_, hyp_)) {
    throw Error(ErrorCode::NotPythagorean,
                "(" + leg_a_.get_str() + ", " + leg_b_.get_str() + ", " + hyp_.get_str() + ")");
  }
}

Triple triple_from_window(const FibWindow& w) {
  if (w.i == 0) throw Error(ErrorCode::DegenerateWindow, "window at i = 0 gives a zero leg");
  const auto& [f0, f1, f2, f3] = w.terms;
  return Triple(Int(f0 * f3), Int(2 * f1 * f2), Int(f1 * f1 + f2 * f2));
}

Primitivity primitivity(const Triple& t) {
  Int g = gcd(gcd(t.leg_a(), t.leg_b()), t.hyp());
  return {g == 1, std::move(g)};
}

Triple scale(const Triple& t, const Int& k) {
  if (k < 1) throw Error(ErrorCode::BadScale, "scale factor " + k.get_str() + " < 1");
  return Triple(Int(k * t.leg_a()), Int(k * t.leg_b()), Int(k * t.hyp()));
}

}  // namespace fibquad
