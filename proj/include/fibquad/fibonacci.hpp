#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "fibquad/numeric.hpp"
#include "fibquad/report.hpp"
#include "fibquad/sweep.hpp"

namespace fibquad {

using Index = std::uint64_t;

// Four consecutive terms F(i), F(i+1), F(i+2), F(i+3), with F(0) = 0, F(1) = 1.
struct FibWindow {
  Index i = 0;
  std::array<Int, 4> terms;
};

/// F(n) by fast doubling; O(log n) multiplications.
Int fib(Index n);

FibWindow fib_window(Index i);

/// F(n) mod m by fast doubling over residues; F(n) itself is never formed.
/// Throws BadModulus when m < 2.
Int fib_mod(Index n, const Int& m);

/// Checks F(4n) = 0 (mod 3) for 1 <= n <= n_max.
VerificationReport verify_fib4n_mod3(Index n_max, Exec exec = Exec::parallel);

/// Position (0-3) of the first term divisible by 3. Throws NoWitness if none.
std::size_t mod3_witness(const FibWindow& w);

/// Number of terms in the window divisible by 3.
std::size_t mod3_witness_count(const FibWindow& w);

inline constexpr Index kBinetMaxIndex = 70;

/// Binet's closed form in long double. Only a cross-check for small n;
/// throws RangeExceeded for n > kBinetMaxIndex.
double fib_binet_approx(Index n);

}  // namespace fibquad
