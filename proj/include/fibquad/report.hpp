#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibquad {

// One failing input of a sweep. `index` is the sweep variable (n, i, hypotenuse, ...).
struct Counterexample {
  std::int64_t index = 0;
  std::string detail;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

enum class Status { pass, fail };

struct VerificationReport {
  std::string claim_id;
  std::string range;
  Status status = Status::pass;
  std::vector<Counterexample> counterexamples;
  double elapsed = 0.0;  // seconds

  bool passed() const { return status == Status::pass; }
};

inline const char* to_string(Status s) { return s == Status::pass ? "pass" : "fail"; }

}  // namespace fibquad
