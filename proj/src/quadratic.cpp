#include "fibquad/quadratic.hpp"

#include <utility>

#include "fibquad/error.hpp"
#include "fibquad/triples.hpp"

namespace fibquad {

QuadPoly::QuadPoly(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (a_ == 0) throw Error(ErrorCode::ZeroLeading, "leading coefficient must be non-zero");
}

Int QuadPoly::discriminant() const { return b_ * b_ - 4 * a_ * c_; }

const char* to_string(RootKind kind) {
  switch (kind) {
    case RootKind::two_distinct: return "two-distinct";
    case RootKind::double_root: return "double";
    case RootKind::irrational_or_complex: return "irrational-or-complex";
  }
  return "unknown";
}

QuadPoly build_quadratic(const Int& leg, const Int& hyp, Orientation orientation) {
  if (sgn(leg) <= 0 || leg >= hyp) {
    throw Error(ErrorCode::BadOrder, "need 0 < leg < hyp, got leg " + leg.get_str() + ", hyp " + hyp.get_str());
  }
  if (!isqrt_exact(Int(hyp * hyp - leg * leg))) {
    throw Error(ErrorCode::NotATripleLeg, "hyp^2 - leg^2 is not a square for leg " + leg.get_str() + ", hyp " +
                                              hyp.get_str());
  }
  Int b = 2 * leg * hyp;
  Int c = leg * leg * leg;
  if (orientation == Orientation::positive) return QuadPoly(leg, std::move(b), std::move(c));
  return QuadPoly(Int(-leg), std::move(b), Int(-c));
}

RootPair solve_quadratic(const QuadPoly& q) {
  const Int disc = q.discriminant();
  if (sgn(disc) < 0) return {};
  auto root = isqrt_exact(disc);
  if (!root) return {};
  const Int two_a = 2 * q.a();
  Rat plus(Int(-q.b() + *root), two_a);
  Rat minus(Int(-q.b() - *root), two_a);
  if (plus < minus) std::swap(plus, minus);
  RootKind kind = sgn(disc) == 0 ? RootKind::double_root : RootKind::two_distinct;
  return {std::move(plus), std::move(minus), kind};
}

RootPair roots_via_triple(const Int& leg, const Int& other, const Int& hyp) {
  Triple t(leg, other, hyp);
  return {Rat(Int(other - hyp)), Rat(Int(-hyp - other)), RootKind::two_distinct};
}

Linear derivative(const QuadPoly& q) { return {Int(2 * q.a()), q.b()}; }

Point vertex(const QuadPoly& q) {
  Rat x(Int(-q.b()), Int(2 * q.a()));
  Rat y = evaluate(q, x);
  return {std::move(x), std::move(y)};
}

Rat evaluate(const QuadPoly& q, const Rat& x) {
  // Horner
  return (Rat(q.a()) * x + Rat(q.b())) * x + Rat(q.c());
}

IntegralBreakdown integral_breakdown(const QuadPoly& q, const Rat& lo, const Rat& hi) {
  const Rat lo2 = lo * lo;
  const Rat hi2 = hi * hi;
  Rat p1 = Rat(q.a(), 3) * (hi2 * hi - lo2 * lo);
  Rat p2 = Rat(q.b(), 2) * (hi2 - lo2);
  Rat p3 = Rat(q.c()) * (hi - lo);
  return {std::move(p1), std::move(p2), std::move(p3)};
}

Rat integrate(const QuadPoly& q, const Rat& lo, const Rat& hi) { return integral_breakdown(q, lo, hi).total(); }

AnalysisReport analyze(const QuadPoly& q) {
  AnalysisReport r{q, solve_quadratic(q), vertex(q), q.discriminant(), {}, {}, {}};
  if (r.roots.rational()) {
    r.breakdown = integral_breakdown(q, r.roots.x2, r.roots.x1);
    r.integral_signed = r.breakdown->total();
    r.integral_abs = abs(*r.integral_signed);
  }
  return r;
}

}  // namespace fibquad
