#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

#include "zetalaurent/numerics/precision.hpp"

namespace zl {

class BigRational;

/// Arbitrary-precision binary floating-point value backed by MPFR.
///
/// Every value carries its own precision. Binary arithmetic produces a
/// result at the larger of the operand precisions, rounded to nearest.
class BigReal {
 public:
  /// Zero at `bits` precision.
  explicit BigReal(Bits bits = kDefaultWorkingBits);
  BigReal(long value, Bits bits);
  BigReal(const mpz_class& value, Bits bits);
  BigReal(const BigRational& value, Bits bits);
  /// Copy of `other` rounded to `bits`.
  BigReal(const BigReal& other, Bits bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  /// Parses `[+-]digits[.digits][e[+-]digits]` (leading or trailing digits
  /// around the point may be omitted, not both). Throws FormatError.
  static BigReal parse(std::string_view text, Bits bits);

  Bits precision() const { return static_cast<Bits>(mpfr_get_prec(value_)); }

  /// Decimal string with `digits` significant digits; digits <= 0 picks
  /// decimal_digits_for_bits(precision()).
  std::string to_string(int digits = 0) const;

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(value_); }
  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  /// Binary exponent e with 0.5 <= |x| / 2^e < 1; undefined for zero.
  long exponent() const { return static_cast<long>(mpfr_get_exp(value_)); }
  /// Bit-level equality including precision.
  bool identical(const BigReal& other) const;

  BigReal operator-() const;
  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal& operator*=(const mpz_class& rhs);
  BigReal& operator/=(const mpz_class& rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, const mpz_class& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const mpz_class& rhs) { return lhs /= rhs; }

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);

  mpfr_srcptr get() const { return value_; }
  mpfr_ptr get() { return value_; }

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal log(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal pow(const BigReal& x, unsigned long e);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);

/// ln(k) for a positive integer k.
BigReal log_of(unsigned long k, Bits bits);
BigReal const_pi(Bits bits);
/// 2^e at `bits` precision.
BigReal pow2(long e, Bits bits);
BigReal max(const BigReal& a, const BigReal& b);

/// |a - b| / max(1, |reference|), rounded at the working precision of a, b.
BigReal scaled_difference(const BigReal& a, const BigReal& b, const BigReal& reference);

/// Units in the last place of x at its own precision.
BigReal ulp(const BigReal& x);

/// x rounded to resolution 2^-target * max(1, |x|): target significant bits
/// when |x| >= 1, fewer below 1. Printing the result with to_string() emits
/// only digits that a scaled tolerance of 2^-target vouches for.
BigReal round_to_target(const BigReal& x, Bits target_bits);

}  // namespace zl
