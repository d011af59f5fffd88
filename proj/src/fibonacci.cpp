#include "fibquad/fibonacci.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "fibquad/error.hpp"

namespace fibquad {

namespace {

// Fast doubling: F(2k) = F(k)(2F(k+1) - F(k)), F(2k+1) = F(k)^2 + F(k+1)^2.
// Returns (F(n), F(n+1)); `reduce` is applied after every step.
template <class Reduce>
std::pair<Int, Int> fib_pair(Index n, Reduce reduce) {
  Int a = 0;  // F(k)
  Int b = 1;  // F(k+1)
  for (int bit = std::bit_width(n) - 1; bit >= 0; --bit) {
    Int c = a * (2 * b - a);
    Int d = a * a + b * b;
    reduce(c);
    reduce(d);
    if ((n >> bit) & 1U) {
      a = d;
      b = c + d;
      reduce(b);
    } else {
      a = std::move(c);
      b = std::move(d);
    }
  }
  return {std::move(a), std::move(b)};
}

}  // namespace

Int fib(Index n) {
  return fib_pair(n, [](Int&) {}).first;
}

FibWindow fib_window(Index i) {
  auto [f0, f1] = fib_pair(i, [](Int&) {});
  Int f2 = f0 + f1;
  Int f3 = f1 + f2;
  return FibWindow{i, {std::move(f0), std::move(f1), std::move(f2), std::move(f3)}};
}

Int fib_mod(Index n, const Int& m) {
  if (m < 2) throw Error(ErrorCode::BadModulus, "modulus " + m.get_str() + " < 2");
  // mpz_fdiv_r keeps residues in [0, m); 2b - a may go negative before reduction.
  return fib_pair(n, [&m](Int& v) { mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t()); }).first;
}

VerificationReport verify_fib4n_mod3(Index n_max, Exec exec) {
  const Int three = 3;
  return sweep_report(
      "mod3", "1 <= n <= " + std::to_string(n_max), 1, static_cast<std::int64_t>(n_max),
      [&three](std::int64_t n) -> std::optional<std::string> {
        Int r = fib_mod(4 * static_cast<Index>(n), three);
        if (r != 0) return "F(4n) mod 3 = " + r.get_str();
        return std::nullopt;
      },
      exec);
}

std::size_t mod3_witness(const FibWindow& w) {
  for (std::size_t k = 0; k < w.terms.size(); ++k) {
    if (mpz_divisible_ui_p(w.terms[k].get_mpz_t(), 3) != 0) return k;
  }
  throw Error(ErrorCode::NoWitness, "no term divisible by 3 in window at i = " + std::to_string(w.i));
}

std::size_t mod3_witness_count(const FibWindow& w) {
  std::size_t count = 0;
  for (const Int& t : w.terms) count += mpz_divisible_ui_p(t.get_mpz_t(), 3) != 0 ? 1 : 0;
  return count;
}

double fib_binet_approx(Index n) {
  if (n > kBinetMaxIndex) {
    throw Error(ErrorCode::RangeExceeded, "Binet approximation limited to n <= 70, got " + std::to_string(n));
  }
  const long double sqrt5 = std::sqrt(5.0L);
  const long double golden = (1.0L + sqrt5) / 2.0L;
  const long double conjugate = (1.0L - sqrt5) / 2.0L;
  const auto e = static_cast<long double>(n);
  return static_cast<double>((std::pow(golden, e) - std::pow(conjugate, e)) / sqrt5);
}

}  // namespace fibquad
