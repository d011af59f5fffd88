#include "fibquad/oracle.hpp"

#include <cmath>
#include <cstdint>

#include "fibquad/error.hpp"

namespace fibquad {

namespace {

// Expanded power form, deliberately not Horner.
Rat value_at(const QuadPoly& q, const Rat& x) {
  Rat x2 = x * x;
  return Rat(q.a()) * x2 + Rat(q.b()) * x + Rat(q.c());
}

bool is_square_u64(std::uint64_t v, std::uint64_t& root) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  root = r;
  return r * r == v;
}

}  // namespace

Rat simpson_exact(const QuadPoly& q, const Rat& lo, const Rat& hi) {
  const Rat mid = (lo + hi) / Rat(2);
  return (hi - lo) / Rat(6) * (value_at(q, lo) + Rat(4) * value_at(q, mid) + value_at(q, hi));
}

bool root_check(const QuadPoly& q, const Rat& r) { return value_at(q, r).is_zero(); }

std::vector<Triple> enumerate_triples(const Int& hyp_max) {
  if (hyp_max > 1000000) throw Error(ErrorCode::RangeExceeded, "exhaustive scan limited to hyp <= 10^6");
  std::vector<Triple> out;
  if (hyp_max < 1) return out;
  const std::uint64_t limit = hyp_max.get_ui();
  for (std::uint64_t c = 1; c <= limit; ++c) {
    for (std::uint64_t a = 1; a < c; ++a) {
      std::uint64_t b = 0;
      if (is_square_u64(c * c - a * a, b)) out.emplace_back(Int(a), Int(b), Int(c));
    }
  }
  return out;
}

}  // namespace fibquad
