#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fibquad {

enum class ErrorCode {
  NegativeInput,
  ZeroDenominator,
  NotAnInteger,
  BadModulus,
  NoWitness,
  RangeExceeded,
  DegenerateWindow,
  NotPythagorean,
  BadScale,
  NotATripleLeg,
  BadOrder,
  ZeroLeading,
};

std::string_view to_string(ErrorCode code) noexcept;

// Precondition violation raised by any of the library's operations.
class Error : public std::domain_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::domain_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fibquad
