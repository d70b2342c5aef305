#pragma once

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zl {

using BigInt = mpz_class;

// Exact rational in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  // Throws DomainError on a zero denominator.
  BigRational(const BigInt& numerator, const BigInt& denominator);
  explicit BigRational(const mpq_class& q);

  // Accepts "num" or "num/den"; throws FormatError.
  static BigRational parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  // Always "num/den", including "/1" for integers.
  std::string to_string() const;

  const mpq_class& get() const { return q_; }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational& operator+=(const BigRational& rhs);
  BigRational& operator-=(const BigRational& rhs);
  BigRational& operator*=(const BigRational& rhs);
  // Throws DomainError when rhs is zero.
  BigRational& operator/=(const BigRational& rhs);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    return cmp(a.q_, b.q_) <=> 0;
  }

 private:
  mpq_class q_;
};

BigInt factorial(unsigned long n);
BigInt binomial(unsigned long n, unsigned long k);

}  // namespace zl
