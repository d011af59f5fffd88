#include <set>
#include <tuple>

#include <gtest/gtest.h>

#include "fibquad/error.hpp"
#include "fibquad/triples.hpp"
#include "test_support.hpp"

using namespace fibquad;

namespace {

std::tuple<Int, Int, Int> sides(const Triple& t) { return {t.leg_a(), t.leg_b(), t.hyp()}; }

}  // namespace

TEST(TripleFromWindow, Examples) {
  EXPECT_EQ(sides(triple_from_window(fib_window(1))), std::make_tuple(Int(3), Int(4), Int(5)));
  EXPECT_EQ(sides(triple_from_window(fib_window(2))), std::make_tuple(Int(5), Int(12), Int(13)));
  EXPECT_EQ(sides(triple_from_window(fib_window(3))), std::make_tuple(Int(16), Int(30), Int(34)));
}

TEST(TripleFromWindow, DegenerateWindow) {
  try {
    triple_from_window(fib_window(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateWindow);
  }
}

TEST(TripleFromWindow, IdentityHoldsUpTo200) {
  for (Index i = 1; i <= 200; ++i) {
    const Triple t = triple_from_window(fib_window(i));
    EXPECT_TRUE(is_pythagorean(t.leg_a(), t.leg_b(), t.hyp())) << "i = " << i;
    EXPECT_GT(t.hyp(), t.leg_a());
    EXPECT_GT(t.hyp(), t.leg_b());
  }
}

TEST(IsPythagorean, Examples) {
  EXPECT_TRUE(is_pythagorean(3, 4, 5));
  EXPECT_FALSE(is_pythagorean(1, 1, 1));
  EXPECT_TRUE(is_pythagorean(5, 12, 13));
  EXPECT_FALSE(is_pythagorean(-3, 4, 5));
  EXPECT_FALSE(is_pythagorean(0, 5, 5));
}

TEST(IsPythagorean, AgreesWithExhaustiveScan) {
  std::set<std::tuple<long, long, long>> scanned;
  for (long c = 1; c <= 100; ++c)
    for (long a = 1; a < c; ++a)
      for (long b = 1; b < c; ++b)
        if (a * a + b * b == c * c) scanned.insert({a, b, c});
  EXPECT_TRUE(scanned.count({3, 4, 5}));
  for (long c = 1; c <= 100; ++c)
    for (long a = 1; a <= 100; ++a)
      for (long b = 1; b <= 100; ++b)
        ASSERT_EQ(is_pythagorean(a, b, c), scanned.count({a, b, c}) == 1) << a << "," << b << "," << c;
}

TEST(TripleCtor, RejectsNonTriples) {
  try {
    Triple(1, 1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotPythagorean);
  }
}

TEST(Primitivity, Examples) {
  const Primitivity base = primitivity(Triple(3, 4, 5));
  EXPECT_TRUE(base.is_primitive);
  EXPECT_EQ(base.g, 1);
  const Primitivity doubled = primitivity(Triple(6, 8, 10));
  EXPECT_FALSE(doubled.is_primitive);
  EXPECT_EQ(doubled.g, 2);
  // A window triple that is not primitive.
  const Primitivity third = primitivity(triple_from_window(fib_window(3)));
  EXPECT_FALSE(third.is_primitive);
  EXPECT_EQ(third.g, 2);
}

TEST(Scale, Examples) {
  EXPECT_EQ(sides(scale(Triple(3, 4, 5), 2)), std::make_tuple(Int(6), Int(8), Int(10)));
  EXPECT_EQ(sides(scale(Triple(3, 4, 5), 1)), std::make_tuple(Int(3), Int(4), Int(5)));
  EXPECT_EQ(sides(scale(Triple(5, 12, 13), 3)), std::make_tuple(Int(15), Int(36), Int(39)));
}

TEST(Scale, BadScale) {
  for (long k : {0L, -1L}) {
    try {
      scale(Triple(3, 4, 5), k);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadScale);
    }
  }
}

TEST(Scale, GcdMultipliesAndRatioIsPreserved) {
  for (Index i = 1; i <= 40; ++i) {
    const Triple t = triple_from_window(fib_window(i));
    const Int g = primitivity(t).g;
    for (long k = 1; k <= 50; ++k) {
      const Triple s = scale(t, k);
      EXPECT_EQ(primitivity(s).g, Int(k * g));
      EXPECT_EQ(Int(s.hyp() * t.leg_a()), Int(s.leg_a() * t.hyp()));
    }
  }
}
