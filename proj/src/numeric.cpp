#include "fibquad/numeric.hpp"

#include "fibquad/error.hpp"

namespace fibquad {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeInput: return "NegativeInput";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotAnInteger: return "NotAnInteger";
    case ErrorCode::BadModulus: return "BadModulus";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::RangeExceeded: return "RangeExceeded";
    case ErrorCode::DegenerateWindow: return "DegenerateWindow";
    case ErrorCode::NotPythagorean: return "NotPythagorean";
    case ErrorCode::BadScale: return "BadScale";
    case ErrorCode::NotATripleLeg: return "NotATripleLeg";
    case ErrorCode::BadOrder: return "BadOrder";
    case ErrorCode::ZeroLeading: return "ZeroLeading";
  }
  return "Unknown";
}

Int gcd(const Int& x, const Int& y) {
  Int g;
  mpz_gcd(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return g;
}

std::optional<Int> isqrt_exact(const Int& x) {
  if (sgn(x) < 0) throw Error(ErrorCode::NegativeInput, "isqrt_exact of " + x.get_str());
  if (mpz_perfect_square_p(x.get_mpz_t()) == 0) return std::nullopt;
  Int r;
  mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
  return r;
}

Int pow(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const Int& x) { return x.get_str(); }

Rat::Rat(const Int& n, const Int& d) : num_(n), den_(d) {
  if (den_ == 0) throw Error(ErrorCode::ZeroDenominator, n.get_str() + "/0");
  reduce();
}

void Rat::reduce() {
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  if (sgn(den_) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  Int g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Int Rat::to_int() const {
  if (den_ != 1) throw Error(ErrorCode::NotAnInteger, str());
  return num_;
}

double Rat::to_double() const {
  mpq_class q(num_, den_);
  return q.get_d();
}

std::string Rat::str() const { return num_.get_str() + "/" + den_.get_str(); }

Rat Rat::operator-() const { return Rat(Int(-num_), den_, Canonical{}); }

Rat& Rat::operator+=(const Rat& rhs) {
  if (den_ == rhs.den_) {
    num_ += rhs.num_;
  } else {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
  }
  reduce();
  return *this;
}

Rat& Rat::operator-=(const Rat& rhs) { return *this += -rhs; }

Rat& Rat::operator*=(const Rat& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  reduce();
  return *this;
}

Rat& Rat::operator/=(const Rat& rhs) {
  if (rhs.num_ == 0) throw Error(ErrorCode::ZeroDenominator, "division of " + str() + " by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  reduce();
  return *this;
}

std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
  Int lhs = a.num_ * b.den_;
  Int rhs = b.num_ * a.den_;
  int c = cmp(lhs, rhs);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rat abs(const Rat& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Rat& x) { return os << x.str(); }

}  // namespace fibquad
