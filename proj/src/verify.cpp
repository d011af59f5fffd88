#include "fibquad/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "fibquad/fibonacci.hpp"
#include "fibquad/oracle.hpp"
#include "fibquad/quadratic.hpp"
#include "fibquad/triples.hpp"

namespace fibquad {

namespace {

std::string range_str(std::string_view var, std::int64_t lo, std::int64_t hi) {
  return std::to_string(lo) + " <= " + std::string(var) + " <= " + std::to_string(hi);
}

// All legs a < hyp with hyp^2 - a^2 square; other leg returned alongside.
std::vector<std::pair<std::int64_t, std::int64_t>> legs_of(std::int64_t hyp) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t a = 1; a < hyp; ++a) {
    const std::int64_t rest = hyp * hyp - a * a;
    auto b = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
    if (b * b == rest) out.emplace_back(a, b);
  }
  return out;
}

std::string triple_str(std::int64_t a, std::int64_t b, std::int64_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {"theorem1", "theorem2", "formula2", "mirror",
                                               "family",   "mod3",     "witness",  "theorem3"};
  return ids;
}

bool is_known_claim(std::string_view claim_id) {
  const auto& ids = claim_ids();
  return std::find(ids.begin(), ids.end(), claim_id) != ids.end();
}

void SweepConfig::set_bound(std::string_view claim_id, std::int64_t bound) {
  const bool all = claim_id == "all";
  const auto as_index = static_cast<Index>(std::max<std::int64_t>(bound, 0));
  const std::int64_t hyp = std::max<std::int64_t>(bound, 5);
  if (all || claim_id == "theorem1") theorem1_max = as_index;
  if (all || claim_id == "theorem2") scaling_windows = as_index;
  if (all || claim_id == "formula2") formula2_hyp_max = hyp;
  if (all || claim_id == "mirror") mirror_hyp_max = hyp;
  if (all || claim_id == "family") family_n_max = as_index;
  if (all || claim_id == "mod3") mod3_n_max = as_index;
  if (all || claim_id == "witness") witness_max = as_index;
  if (all || claim_id == "theorem3") theorem3_max = as_index;
}

VerificationReport verify_theorem1(Index i_max, Exec exec) {
  return sweep_report(
      "theorem1", range_str("i", 1, static_cast<std::int64_t>(i_max)), 1, static_cast<std::int64_t>(i_max),
      [](std::int64_t i) -> std::optional<std::string> {
        const Triple t = triple_from_window(fib_window(static_cast<Index>(i)));
        if (!is_pythagorean(t.leg_a(), t.leg_b(), t.hyp())) return "alpha^2 + beta^2 != gamma^2";
        return std::nullopt;
      },
      exec);
}

VerificationReport verify_scaling(Index windows, std::int64_t k_max, Exec exec) {
  return sweep_report(
      "theorem2", range_str("i", 1, static_cast<std::int64_t>(windows)) + ", 1 <= k <= " + std::to_string(k_max), 1,
      static_cast<std::int64_t>(windows),
      [k_max](std::int64_t i) -> std::optional<std::string> {
        const Triple base = triple_from_window(fib_window(static_cast<Index>(i)));
        const Int g = primitivity(base).g;
        for (std::int64_t k = 1; k <= k_max; ++k) {
          const Int kk = static_cast<long>(k);
          const Triple scaled = scale(base, kk);
          if (primitivity(scaled).g != kk * g) return "gcd not multiplied by k = " + std::to_string(k);
          if (Int(scaled.hyp() * base.leg_a()) != Int(scaled.leg_a() * base.hyp())) {
            return "side ratio changed at k = " + std::to_string(k);
          }
        }
        return std::nullopt;
      },
      exec);
}

VerificationReport verify_formula2(std::int64_t hyp_max, Exec exec) {
  return sweep_report(
      "formula2", range_str("hyp", 5, hyp_max), 5, hyp_max,
      [](std::int64_t hyp) -> std::optional<std::string> {
        for (auto [a, b] : legs_of(hyp)) {
          const Int leg = static_cast<long>(a);
          const Int other = static_cast<long>(b);
          const Int h = static_cast<long>(hyp);
          const QuadPoly q = build_quadratic(leg, h, Orientation::positive);
          const RootPair solved = solve_quadratic(q);
          const RootPair closed = roots_via_triple(leg, other, h);
          const std::string where = " at " + triple_str(a, b, hyp);
          if (!(solved == closed) || !solved.x1.is_integer() || !solved.x2.is_integer()) {
            return "roots differ from -hyp +/- other" + where;
          }
          Int two_leg_other = 2 * leg * other;
          if (q.discriminant() != Int(two_leg_other * two_leg_other)) return "discriminant" + where;
          const Point v = vertex(q);
          if (!(v == Point{Rat(Int(-h)), Rat(Int(-leg * other * other))})) return "vertex" + where;
          const Rat integral = integrate(q, solved.x2, solved.x1);
          if (integral != Rat(Int(-4 * leg * other * other * other), 3)) return "integral" + where;
        }
        return std::nullopt;
      },
      exec);
}

VerificationReport verify_mirror(std::int64_t hyp_max, Exec exec) {
  return sweep_report(
      "mirror", range_str("hyp", 5, hyp_max), 5, hyp_max,
      [](std::int64_t hyp) -> std::optional<std::string> {
        for (auto [a, b] : legs_of(hyp)) {
          const Int leg = static_cast<long>(a);
          const Int h = static_cast<long>(hyp);
          const QuadPoly q = build_quadratic(leg, h, Orientation::positive);
          const QuadPoly m = build_quadratic(leg, h, Orientation::negative);
          const std::string where = " at " + triple_str(a, b, hyp);
          for (long x = -3; x <= 3; ++x) {
            const Rat rx(Int(x), Int(2));
            if (evaluate(m, rx) != -evaluate(q, -rx)) return "q~(x) != -q(-x)" + where;
          }
          const AnalysisReport rq = analyze(q);
          const AnalysisReport rm = analyze(m);
          if (rm.roots.x1 != -rq.roots.x2 || rm.roots.x2 != -rq.roots.x1) return "roots not negated" + where;
          if (rm.vertex.x != -rq.vertex.x || rm.vertex.y != -rq.vertex.y) return "vertex not negated" + where;
          if (*rm.integral_signed != -*rq.integral_signed) return "integral not negated" + where;
        }
        return std::nullopt;
      },
      exec);
}

VerificationReport verify_scaled_family(Index n_max, Exec exec, const std::optional<CoefficientFault>& fault) {
  return sweep_report(
      "family", range_str("n", 0, static_cast<std::int64_t>(n_max)), 0, static_cast<std::int64_t>(n_max),
      [&fault](std::int64_t n) -> std::optional<std::string> {
        const Int m = static_cast<long>(n + 1);
        const Int m3 = pow(m, 3);
        const Int m4 = pow(m, 4);
        struct Expect {
          FamilyId id;
          long leg;
          long right_root;
          long left_root;
          long vertex_factor;
          long integral_factor;
        };
        // f: 4*12(n+1)^3 and 4^4(n+1)^4; g: 3*12(n+1)^3 and 12^2(n+1)^4.
        for (const Expect& e : {Expect{FamilyId::scaled_f, 3, -1, -9, -48, 256},
                                Expect{FamilyId::scaled_g, 4, -2, -8, -36, 144}}) {
          const QuadPoly q =
              apply_fault(build_quadratic(Int(e.leg * m), Int(5 * m), Orientation::positive), e.id, n, fault);
          const std::string tag = std::string(to_string(e.id)) + ": ";
          const RootPair r = solve_quadratic(q);
          if (!(r == RootPair{Rat(Int(e.right_root * m)), Rat(Int(e.left_root * m)), RootKind::two_distinct})) {
            return tag + "roots";
          }
          const Linear d = derivative(q);
          if (Rat(Int(-d.intercept), d.slope) != Rat(Int(-5 * m))) return tag + "derivative root";
          if (vertex(q).y != Rat(Int(e.vertex_factor * m3))) return tag + "vertex value";
          if (abs(integrate(q, r.x2, r.x1)) != Rat(Int(e.integral_factor * m4))) return tag + "integral";
        }
        return std::nullopt;
      },
      exec);
}

VerificationReport verify_mod3_witness(Index i_max, Exec exec) {
  return sweep_report(
      "witness", range_str("i", 1, static_cast<std::int64_t>(i_max)), 1, static_cast<std::int64_t>(i_max),
      [](std::int64_t i) -> std::optional<std::string> {
        const FibWindow w = fib_window(static_cast<Index>(i));
        mod3_witness(w);
        const std::size_t count = mod3_witness_count(w);
        if (count != 1) return std::to_string(count) + " terms divisible by 3";
        return std::nullopt;
      },
      exec);
}

VerificationReport run_claim(std::string_view claim_id, const SweepConfig& c) {
  if (claim_id == "theorem1") return verify_theorem1(c.theorem1_max, c.exec);
  if (claim_id == "theorem2") return verify_scaling(c.scaling_windows, c.scaling_k_max, c.exec);
  if (claim_id == "formula2") return verify_formula2(c.formula2_hyp_max, c.exec);
  if (claim_id == "mirror") return verify_mirror(c.mirror_hyp_max, c.exec);
  if (claim_id == "family") return verify_scaled_family(c.family_n_max, c.exec, c.fault);
  if (claim_id == "mod3") return verify_fib4n_mod3(c.mod3_n_max, c.exec);
  if (claim_id == "witness") return verify_mod3_witness(c.witness_max, c.exec);
  if (claim_id == "theorem3") return verify_theorem3(c.theorem3_max, c.exec, c.fault);
  throw std::invalid_argument("unknown claim: " + std::string(claim_id));
}

std::vector<VerificationReport> run_all_claims(const SweepConfig& config) {
  std::vector<VerificationReport> reports;
  for (const std::string& id : claim_ids()) reports.push_back(run_claim(id, config));
  return reports;
}

}  // namespace fibquad
