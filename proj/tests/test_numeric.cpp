#include <gtest/gtest.h>

#include "fibquad/error.hpp"
#include "fibquad/numeric.hpp"
#include "test_support.hpp"

using namespace fibquad;
using fibquad::testing::random_rat;
using fibquad::testing::uniform;

TEST(Gcd, Examples) {
  EXPECT_EQ(gcd(12, 8), 4);
  EXPECT_EQ(gcd(3, 5), 1);
  EXPECT_EQ(gcd(0, 7), 7);
  EXPECT_EQ(gcd(0, 0), 0);
  EXPECT_EQ(gcd(-12, 8), 4);
}

TEST(IsqrtExact, Examples) {
  EXPECT_EQ(isqrt_exact(16), Int(4));
  EXPECT_EQ(isqrt_exact(0), Int(0));
  EXPECT_FALSE(isqrt_exact(15).has_value());
}

TEST(IsqrtExact, NegativeInputThrows) {
  try {
    isqrt_exact(-1);
    FAIL() << "expected NegativeInput";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NegativeInput);
  }
}

TEST(IsqrtExact, RootIsExactAndMaximal) {
  for (long x = 0; x <= 20000; ++x) {
    if (auto r = isqrt_exact(x)) {
      EXPECT_EQ(Int(*r * *r), Int(x));
      EXPECT_GT(Int((*r + 1) * (*r + 1)), Int(x));
    }
  }
  // Large squares: 10^130-scale values arise from cubed F(100)-sized coefficients.
  const Int big = pow(Int(10), 65) + 12345;
  EXPECT_EQ(isqrt_exact(Int(big * big)), big);
  EXPECT_FALSE(isqrt_exact(Int(big * big + 1)).has_value());
}

TEST(Rat, CanonicalForm) {
  EXPECT_EQ(rat(6, -4), Rat(-3, 2));
  EXPECT_EQ(rat(6, -4).num(), -3);
  EXPECT_EQ(rat(6, -4).den(), 2);
  EXPECT_EQ(rat(0, 9).num(), 0);
  EXPECT_EQ(rat(0, 9).den(), 1);
  EXPECT_EQ(rat(256, 1).str(), "256/1");
  EXPECT_EQ(rat(-0, -5).str(), "0/1");
}

TEST(Rat, ZeroDenominator) {
  try {
    rat(1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ZeroDenominator);
  }
  EXPECT_THROW(Rat(1) / Rat(0), Error);
}

TEST(Rat, ToIntRequiresUnitDenominator) {
  EXPECT_EQ(Rat(Int(-256)).to_int(), -256);
  EXPECT_THROW(rat(1, 3).to_int(), Error);
}

TEST(Rat, FieldLawsRandomized) {
  for (int trial = 0; trial < 2000; ++trial) {
    const Rat a = random_rat();
    const Rat b = random_rat();
    const Rat c = random_rat();
    EXPECT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) EXPECT_EQ(a * (Rat(1) / a), Rat(1));
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - b, -(b - a));
    // canonical invariant after every operation
    const Rat s = a * b + c;
    EXPECT_GT(s.den(), 0);
    EXPECT_EQ(gcd(s.num(), s.den()), 1);
  }
}

TEST(Rat, OrderingMatchesCrossMultiplication) {
  for (int trial = 0; trial < 1000; ++trial) {
    const Rat a = random_rat();
    const Rat b = random_rat();
    const bool less = Int(a.num() * b.den()) < Int(b.num() * a.den());
    EXPECT_EQ(a < b, less);
  }
}

TEST(Rat, IntRoundTrip) {
  for (int trial = 0; trial < 500; ++trial) {
    const Int x = pow(Int(uniform(-1000000, 1000000)), static_cast<unsigned long>(uniform(1, 9)));
    EXPECT_EQ(Rat(x).to_int(), x);
  }
}
