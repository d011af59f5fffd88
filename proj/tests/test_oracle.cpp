#include <algorithm>

#include <gtest/gtest.h>

#include "fibquad/error.hpp"
#include "fibquad/family.hpp"
#include "fibquad/oracle.hpp"
#include "test_support.hpp"

using namespace fibquad;
using fibquad::testing::random_rat;
using fibquad::testing::uniform;

namespace {

bool contains(const std::vector<Triple>& list, const Triple& t) {
  return std::find(list.begin(), list.end(), t) != list.end();
}

}  // namespace

TEST(SimpsonExact, Examples) {
  EXPECT_EQ(simpson_exact(QuadPoly(3, 30, 27), -9, -1), Rat(-256));
  EXPECT_EQ(simpson_exact(QuadPoly(1, 0, 0), 0, 3), Rat(9));
  EXPECT_EQ(simpson_exact(QuadPoly(4, 40, 64), -8, -2), Rat(-144));
}

TEST(SimpsonExact, EqualsAntiderivativeOnRandomQuadratics) {
  const long big = 1000000000;
  for (int trial = 0; trial < 1000; ++trial) {
    long a = 0;
    while (a == 0) a = uniform(-big, big);
    const QuadPoly q(a, uniform(-big, big), uniform(-big, big));
    const Rat lo = random_rat(100000, 1000);
    const Rat hi = random_rat(100000, 1000);
    ASSERT_EQ(simpson_exact(q, lo, hi), integrate(q, lo, hi));
  }
}

TEST(RootCheck, Examples) {
  EXPECT_TRUE(root_check(QuadPoly(3, 30, 27), -9));
  EXPECT_FALSE(root_check(QuadPoly(3, 30, 27), 0));
  EXPECT_TRUE(root_check(QuadPoly(12, 312, 1728), -18));
}

TEST(RootCheck, EveryProducedRootPairPasses) {
  for (Index i = 1; i <= 100; ++i) {
    for (const FamilyPoly& fp : {build_f(i), build_g(i)}) {
      ASSERT_TRUE(root_check(fp.poly, fp.closed_roots.x1));
      ASSERT_TRUE(root_check(fp.poly, fp.closed_roots.x2));
      const RootPair solved = solve_quadratic(fp.poly);
      ASSERT_TRUE(root_check(fp.poly, solved.x1));
      ASSERT_TRUE(root_check(fp.poly, solved.x2));
    }
  }
  for (int trial = 0; trial < 300; ++trial) {
    const QuadPoly q(uniform(1, 30), uniform(-100, 100), uniform(-100, 100));
    const RootPair r = solve_quadratic(q);
    if (!r.rational()) continue;
    EXPECT_TRUE(root_check(q, r.x1));
    EXPECT_TRUE(root_check(q, r.x2));
  }
}

TEST(EnumerateTriples, Examples) {
  EXPECT_TRUE(contains(enumerate_triples(5), Triple(3, 4, 5)));
  EXPECT_TRUE(contains(enumerate_triples(13), Triple(5, 12, 13)));
  EXPECT_TRUE(enumerate_triples(4).empty());
  EXPECT_EQ(enumerate_triples(5).size(), 2U);  // (3,4,5) and (4,3,5)
}

TEST(EnumerateTriples, MatchesEuclidGeneration) {
  const auto scanned = enumerate_triples(300);
  const auto generated = fibquad::testing::euclid_triples(300);
  EXPECT_EQ(scanned.size(), generated.size());
  for (const auto& t : generated) EXPECT_TRUE(contains(scanned, Triple(t.a, t.b, t.c)));
}

// The scan is quadratic in the hypotenuse, so only windows with hyp <= 20000
// (i <= 9; hyp = F(2i+3)) are checked this way.
TEST(EnumerateTriples, ContainsWindowTriples) {
  const auto scanned = enumerate_triples(20000);
  Index checked = 0;
  for (Index i = 1;; ++i) {
    const Triple t = triple_from_window(fib_window(i));
    if (t.hyp() > 20000) break;
    EXPECT_TRUE(contains(scanned, t)) << "i = " << i;
    ++checked;
  }
  EXPECT_EQ(checked, 9U);
}

TEST(EnumerateTriples, RangeExceeded) { EXPECT_THROW(enumerate_triples(2000000), Error); }
