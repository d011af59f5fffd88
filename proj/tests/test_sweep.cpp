#include <stdexcept>

#include <gtest/gtest.h>
#include <omp.h>

#include "fibquad/family.hpp"
#include "fibquad/sweep.hpp"
#include "fibquad/verify.hpp"

using namespace fibquad;

namespace {

std::optional<std::string> every_seventh(std::int64_t i) {
  if (i % 7 == 0) return "multiple of 7";
  if (i == 50) throw std::runtime_error("boom");
  return std::nullopt;
}

}  // namespace

TEST(Sweep, SerialReference) {
  const auto cx = sweep_serial(1, 30, every_seventh);
  ASSERT_EQ(cx.size(), 4U);
  EXPECT_EQ(cx[0], (Counterexample{7, "multiple of 7"}));
  EXPECT_EQ(cx[3].index, 28);
}

TEST(Sweep, ParallelMatchesSerial) {
  for (int threads : {1, 2, 4, 8}) {
    omp_set_num_threads(threads);
    EXPECT_EQ(sweep_parallel(-100, 1000, every_seventh), sweep_serial(-100, 1000, every_seventh));
  }
}

TEST(Sweep, ExceptionsBecomeCounterexamples) {
  const auto cx = sweep_parallel(45, 55, every_seventh);
  ASSERT_EQ(cx.size(), 2U);  // 49 and 50
  EXPECT_EQ(cx[1].index, 50);
  EXPECT_EQ(cx[1].detail, "exception: boom");
}

TEST(Sweep, EmptyRange) {
  EXPECT_TRUE(sweep_parallel(5, 4, every_seventh).empty());
  EXPECT_TRUE(sweep_serial(5, 4, every_seventh).empty());
}

TEST(Sweep, ClaimsAgreeAcrossExecutionModes) {
  omp_set_num_threads(4);
  SweepConfig serial;
  serial.exec = Exec::serial;
  serial.fault = CoefficientFault{FamilyId::fib_g, 17, Coefficient::a, 3};
  SweepConfig parallel = serial;
  parallel.exec = Exec::parallel;
  for (const std::string& id : claim_ids()) {
    const VerificationReport a = run_claim(id, serial);
    const VerificationReport b = run_claim(id, parallel);
    EXPECT_EQ(a.status, b.status) << id;
    EXPECT_EQ(a.counterexamples, b.counterexamples) << id;
  }
}
