#include "zetalaurent/numerics/big_rational.hpp"

#include <cctype>

#include "zetalaurent/errors.hpp"

namespace zl {
namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw FormatError("malformed integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return BigInt(std::string(s), 10);
}

}  // namespace

BigRational::BigRational(const BigInt& numerator, const BigInt& denominator) : q_(numerator, denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  q_.canonicalize();
}

BigRational::BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

BigRational BigRational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const BigInt den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw FormatError("rational with zero denominator: '" + std::string(text) + "'");
  return BigRational(num, den);
}

std::string BigRational::to_string() const { return q_.get_num().get_str() + "/" + q_.get_den().get_str(); }

BigRational& BigRational::operator+=(const BigRational& rhs) {
  q_ += rhs.q_;
  return *this;
}

BigRational& BigRational::operator-=(const BigRational& rhs) {
  q_ -= rhs.q_;
  return *this;
}

BigRational& BigRational::operator*=(const BigRational& rhs) {
  q_ *= rhs.q_;
  return *this;
}

BigRational& BigRational::operator/=(const BigRational& rhs) {
  if (rhs.q_ == 0) throw DomainError("rational division by zero");
  q_ /= rhs.q_;
  return *this;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace zl
