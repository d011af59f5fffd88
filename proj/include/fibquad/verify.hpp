#pragma once

/**
 * @file verify.hpp
 * @brief Registry of machine-checked claims.
 *
 * Each claim is an index sweep that returns a VerificationReport. Claims are
 * independent; run_all_claims executes them in registry order.
 *
 *   theorem1  window triples satisfy the Pythagorean identity
 *   theorem2  scaling by k keeps the identity and multiplies the gcd by k
 *   formula2  leg/hyp quadratics: integer roots -hyp +/- other, discriminant,
 *             vertex and root-to-root integral closed forms (scan over hyp)
 *   mirror    negative orientation is q~(x) = -q(-x) with negated features
 *   family    scaled (3,4,5) f/g polynomials against their closed forms in n
 *   mod3      F(4n) = 0 (mod 3)
 *   witness   each window i >= 1 has exactly one term divisible by 3
 *   theorem3  Fibonacci f/g families have integral root-to-root integrals
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibquad/family.hpp"
#include "fibquad/report.hpp"
#include "fibquad/sweep.hpp"

namespace fibquad {

struct SweepConfig {
  Index theorem1_max = 200;
  Index scaling_windows = 30;
  std::int64_t scaling_k_max = 50;
  std::int64_t formula2_hyp_max = 2000;
  std::int64_t mirror_hyp_max = 500;
  Index family_n_max = 1000;
  Index mod3_n_max = 10000;
  Index witness_max = 500;
  Index theorem3_max = 100;
  Exec exec = Exec::parallel;
  std::optional<CoefficientFault> fault;

  /// Sets the primary bound of `claim_id` (all bounds for "all").
  /// Hypotenuse bounds are clamped to at least 5.
  void set_bound(std::string_view claim_id, std::int64_t bound);
};

const std::vector<std::string>& claim_ids();

bool is_known_claim(std::string_view claim_id);

VerificationReport verify_theorem1(Index i_max, Exec exec = Exec::parallel);
VerificationReport verify_scaling(Index windows, std::int64_t k_max, Exec exec = Exec::parallel);
VerificationReport verify_formula2(std::int64_t hyp_max, Exec exec = Exec::parallel);
VerificationReport verify_mirror(std::int64_t hyp_max, Exec exec = Exec::parallel);
VerificationReport verify_scaled_family(Index n_max, Exec exec = Exec::parallel,
                                        const std::optional<CoefficientFault>& fault = std::nullopt);
VerificationReport verify_mod3_witness(Index i_max, Exec exec = Exec::parallel);

/// Throws std::invalid_argument for an unknown claim id.
VerificationReport run_claim(std::string_view claim_id, const SweepConfig& config);

std::vector<VerificationReport> run_all_claims(const SweepConfig& config = {});

}  // namespace fibquad
