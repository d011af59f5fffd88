#pragma once

// Shared helpers for the test suites: seeded generators and independent
// reference computations that never go through the library's fast paths.

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "fibquad/numeric.hpp"

namespace fibquad::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20261019);
  return engine;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

inline Rat random_rat(long bound = 1000, long den_bound = 50) {
  return Rat(Int(uniform(-bound, bound)), Int(uniform(1, den_bound)));
}

// F(0..n) by iterating the recurrence directly.
inline std::vector<Int> fib_table(std::size_t n) {
  std::vector<Int> t{0, 1};
  while (t.size() <= n) t.push_back(t[t.size() - 1] + t[t.size() - 2]);
  t.resize(n + 1);
  return t;
}

struct SmallTriple {
  std::int64_t a, b, c;
};

// Every Pythagorean triple with c <= hyp_max, legs in both orders, via
// Euclid's parametrization (m > n, coprime, opposite parity) and multiples.
inline std::vector<SmallTriple> euclid_triples(std::int64_t hyp_max) {
  std::vector<SmallTriple> out;
  for (std::int64_t m = 2; m * m + 1 <= hyp_max; ++m) {
    for (std::int64_t n = 1; n < m; ++n) {
      if ((m - n) % 2 == 0 || std::gcd(m, n) != 1) continue;
      const std::int64_t c0 = m * m + n * n;
      if (c0 > hyp_max) break;
      const std::int64_t a0 = m * m - n * n;
      const std::int64_t b0 = 2 * m * n;
      for (std::int64_t k = 1; k * c0 <= hyp_max; ++k) {
        out.push_back({k * a0, k * b0, k * c0});
        out.push_back({k * b0, k * a0, k * c0});
      }
    }
  }
  return out;
}

}  // namespace fibquad::testing
