#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hampow {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an operation would exceed an explicit feasibility guard
// (factorial sweeps, subset enumerations). Distinct from invalid_argument
// so callers can suggest the override flag.
class GuardError : public std::runtime_error {
 public:
  explicit GuardError(const std::string& msg) : std::runtime_error(msg) {}
};

Integer binom_integer(long n, long k);
Integer factorial_integer(long n);

// Overflow-checked 64-bit binomial; throws std::overflow_error.
std::uint64_t binom_u64(long n, long k);
std::uint64_t factorial_u64(long n);

// Exact p^e for rational p, integer e >= 0.
Rational rational_pow(const Rational& p, unsigned long e);

// Parses "num/den", plain integers, and decimal literals ("0.3" -> 3/10).
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

double ln_of_integer(const Integer& z);  // natural log, z > 0

// Nonnegative real carried as its natural logarithm. Zero is ln = -inf.
// C' for (r,k)=(3,1) is around e^133, so bounds live here rather than in
// fixed-width floats.
class LogValue {
 public:
  LogValue() : ln_(-std::numeric_limits<double>::infinity()) {}

  static LogValue zero() { return LogValue(); }
  static LogValue one() { return from_ln(0.0); }
  static LogValue from_ln(double ln_v) {
    LogValue v;
    v.ln_ = ln_v;
    return v;
  }
  static LogValue from_value(double v) {
    if (v < 0.0) throw std::invalid_argument("LogValue: negative value");
    return v == 0.0 ? zero() : from_ln(std::log(v));
  }
  static LogValue from_integer(const Integer& z) {
    if (z < 0) throw std::invalid_argument("LogValue: negative integer");
    return z == 0 ? zero() : from_ln(ln_of_integer(z));
  }

  bool is_zero() const { return std::isinf(ln_) && ln_ < 0; }
  double ln() const { return ln_; }
  double to_double() const { return std::exp(ln_); }  // may overflow to inf

  LogValue operator*(const LogValue& o) const {
    if (is_zero() || o.is_zero()) return zero();
    return from_ln(ln_ + o.ln_);
  }
  LogValue operator/(const LogValue& o) const {
    if (o.is_zero()) throw std::domain_error("LogValue: division by zero");
    if (is_zero()) return zero();
    return from_ln(ln_ - o.ln_);
  }
  LogValue pow(double e) const {
    if (is_zero()) {
      if (e > 0) return zero();
      if (e == 0) return one();
      throw std::domain_error("LogValue: 0 to a negative power");
    }
    return from_ln(ln_ * e);
  }
  // log-sum-exp
  LogValue operator+(const LogValue& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    double hi = std::max(ln_, o.ln_), lo = std::min(ln_, o.ln_);
    return from_ln(hi + std::log1p(std::exp(lo - hi)));
  }

  friend bool operator<(const LogValue& a, const LogValue& b) { return a.ln_ < b.ln_; }
  friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
  friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
  friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

 private:
  double ln_;
};

// Counter-based uniform draw on [0,1): a pure function of (seed, stream,
// counter), so streams are reproducible under any scheduling and coupled
// across parameter grids.
std::uint64_t mix64(std::uint64_t x);
double counter_uniform(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

}  // namespace hampow
