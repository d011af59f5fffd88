#pragma once

/**
 * @file family.hpp
 * @brief Quadratic families generated by Fibonacci windows.
 *
 * For the window (F(i), F(i+1), F(i+2), F(i+3)) let
 *   alpha = F(i)F(i+3),  beta = 2F(i+1)F(i+2),  gamma = F(i+1)^2 + F(i+2)^2.
 * Flavor f seeds the quadratic on alpha, flavor g on beta:
 *   f(x) = alpha x^2 + 2 alpha gamma x + alpha^3,  roots -(F(i+1) -/+ F(i+2))^2
 *   g(x) = beta x^2 + 2 beta gamma x + beta^3,     roots -gamma +/- alpha
 * Both root-to-root integrals are integers for every i >= 1.
 */

#include <cstdint>
#include <optional>
#include <string_view>

#include "fibquad/fibonacci.hpp"
#include "fibquad/quadratic.hpp"
#include "fibquad/report.hpp"
#include "fibquad/sweep.hpp"

namespace fibquad {

enum class Flavor { f, g };

const char* to_string(Flavor flavor);

struct FamilyPoly {
  FibWindow window;
  Flavor flavor;
  QuadPoly poly;
  RootPair closed_roots;
};

/// Throws DegenerateWindow for i == 0.
FamilyPoly build_f(Index i);
FamilyPoly build_g(Index i);

/// Closed-form roots of f: (-(F(i+1) - F(i+2))^2, -(F(i+1) + F(i+2))^2).
RootPair theta_roots(Index i);

/// Closed-form roots of g: (-gamma + alpha, -gamma - alpha).
RootPair phi_roots(Index i);

// Polynomial families the verification claims construct. The scaled_* entries
// are the (3,4,5) multiples indexed by n >= 0, the fib_* entries are indexed by i >= 1.
enum class FamilyId { scaled_f, scaled_g, fib_f, fib_g };

enum class Coefficient { a, b, c };

/// Deliberate corruption of one coefficient of one family member, for
/// checking that the verification claims can actually fail.
struct CoefficientFault {
  FamilyId family;
  std::int64_t index;
  Coefficient which;
  Int delta = 1;
};

const char* to_string(FamilyId family);
std::optional<FamilyId> parse_family_id(std::string_view name);

/// Returns q unchanged unless `fault` targets (family, index).
QuadPoly apply_fault(const QuadPoly& q, FamilyId family, std::int64_t index,
                     const std::optional<CoefficientFault>& fault);

/// Per i in [1, i_max] and both flavors: closed roots equal solver roots, the
/// root-to-root integral and each of P1, P2, P3 are integers, the integral
/// equals -(4/3) * seed * other^3, and 3 divides the window product.
VerificationReport verify_theorem3(Index i_max, Exec exec = Exec::parallel,
                                   const std::optional<CoefficientFault>& fault = std::nullopt);

}  // namespace fibquad
