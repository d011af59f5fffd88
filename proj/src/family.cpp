#include "fibquad/family.hpp"

#include <string>

#include "fibquad/error.hpp"
#include "fibquad/triples.hpp"

namespace fibquad {

namespace {

void require_nondegenerate(Index i) {
  if (i == 0) throw Error(ErrorCode::DegenerateWindow, "family polynomials need i >= 1");
}

QuadPoly seeded(const Int& seed, const Int& gamma) {
  return QuadPoly(seed, Int(2 * seed * gamma), Int(seed * seed * seed));
}

struct WindowParts {
  Int alpha;
  Int beta;
  Int gamma;
};

WindowParts parts(const FibWindow& w) {
  const auto& [f0, f1, f2, f3] = w.terms;
  return {Int(f0 * f3), Int(2 * f1 * f2), Int(f1 * f1 + f2 * f2)};
}

RootPair theta_from(const FibWindow& w) {
  const Int& f1 = w.terms[1];
  const Int& f2 = w.terms[2];
  Int diff = f1 - f2;
  Int sum = f1 + f2;
  return {Rat(Int(-diff * diff)), Rat(Int(-sum * sum)), RootKind::two_distinct};
}

RootPair phi_from(const WindowParts& p) {
  return {Rat(Int(p.alpha - p.gamma)), Rat(Int(-p.gamma - p.alpha)), RootKind::two_distinct};
}

std::optional<std::string> check_flavor(const FamilyPoly& fp, const QuadPoly& poly, const Int& other) {
  const std::string tag = std::string("flavor ") + to_string(fp.flavor) + ": ";
  const RootPair solved = solve_quadratic(poly);
  if (!(solved == fp.closed_roots)) return tag + "closed-form roots differ from solver roots";
  if (!evaluate(poly, fp.closed_roots.x1).is_zero() || !evaluate(poly, fp.closed_roots.x2).is_zero()) {
    return tag + "closed-form root does not vanish";
  }
  const IntegralBreakdown parts = integral_breakdown(poly, fp.closed_roots.x2, fp.closed_roots.x1);
  if (!parts.p1.is_integer()) return tag + "P1 = " + parts.p1.str() + " is not an integer";
  if (!parts.p2.is_integer()) return tag + "P2 = " + parts.p2.str() + " is not an integer";
  if (!parts.p3.is_integer()) return tag + "P3 = " + parts.p3.str() + " is not an integer";
  const Rat integral = parts.total();
  if (!integral.is_integer()) return tag + "integral " + integral.str() + " is not an integer";
  const Rat expected = Rat(Int(-4 * poly.a() * other * other * other), 3);
  if (integral != expected) return tag + "integral " + integral.str() + " != " + expected.str();
  return std::nullopt;
}

}  // namespace

const char* to_string(Flavor flavor) { return flavor == Flavor::f ? "f" : "g"; }

FamilyPoly build_f(Index i) {
  require_nondegenerate(i);
  FibWindow w = fib_window(i);
  WindowParts p = parts(w);
  QuadPoly poly = seeded(p.alpha, p.gamma);
  RootPair roots = theta_from(w);
  return {std::move(w), Flavor::f, std::move(poly), std::move(roots)};
}

FamilyPoly build_g(Index i) {
  require_nondegenerate(i);
  FibWindow w = fib_window(i);
  WindowParts p = parts(w);
  QuadPoly poly = seeded(p.beta, p.gamma);
  RootPair roots = phi_from(p);
  return {std::move(w), Flavor::g, std::move(poly), std::move(roots)};
}

RootPair theta_roots(Index i) {
  require_nondegenerate(i);
  return theta_from(fib_window(i));
}

RootPair phi_roots(Index i) {
  require_nondegenerate(i);
  return phi_from(parts(fib_window(i)));
}

const char* to_string(FamilyId family) {
  switch (family) {
    case FamilyId::scaled_f: return "scaled_f";
    case FamilyId::scaled_g: return "scaled_g";
    case FamilyId::fib_f: return "fib_f";
    case FamilyId::fib_g: return "fib_g";
  }
  return "unknown";
}

std::optional<FamilyId> parse_family_id(std::string_view name) {
  for (FamilyId id : {FamilyId::scaled_f, FamilyId::scaled_g, FamilyId::fib_f, FamilyId::fib_g}) {
    if (name == to_string(id)) return id;
  }
  return std::nullopt;
}

QuadPoly apply_fault(const QuadPoly& q, FamilyId family, std::int64_t index,
                     const std::optional<CoefficientFault>& fault) {
  if (!fault || fault->family != family || fault->index != index) return q;
  switch (fault->which) {
    case Coefficient::a: return QuadPoly(Int(q.a() + fault->delta), q.b(), q.c());
    case Coefficient::b: return QuadPoly(q.a(), Int(q.b() + fault->delta), q.c());
    case Coefficient::c: return QuadPoly(q.a(), q.b(), Int(q.c() + fault->delta));
  }
  return q;
}

VerificationReport verify_theorem3(Index i_max, Exec exec, const std::optional<CoefficientFault>& fault) {
  return sweep_report(
      "theorem3", "1 <= i <= " + std::to_string(i_max), 1, static_cast<std::int64_t>(i_max),
      [&fault](std::int64_t i) -> std::optional<std::string> {
        const auto idx = static_cast<Index>(i);
        const FamilyPoly f = build_f(idx);
        const FamilyPoly g = build_g(idx);
        const Triple t = triple_from_window(f.window);

        Int product = f.window.terms[0] * f.window.terms[1];
        product *= f.window.terms[2] * f.window.terms[3];
        if (mpz_divisible_ui_p(product.get_mpz_t(), 3) == 0) return "window product not divisible by 3";

        if (auto e = check_flavor(f, apply_fault(f.poly, FamilyId::fib_f, i, fault), t.leg_b())) return e;
        if (auto e = check_flavor(g, apply_fault(g.poly, FamilyId::fib_g, i, fault), t.leg_a())) return e;
        return std::nullopt;
      },
      exec);
}

}  // namespace fibquad
