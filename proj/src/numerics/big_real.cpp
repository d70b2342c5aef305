#include "zetalaurent/numerics/big_real.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <memory>
#include <utility>

#include "zetalaurent/errors.hpp"
#include "zetalaurent/numerics/big_rational.hpp"

namespace zl {
namespace {

constexpr mpfr_rnd_t kRound = MPFR_RNDN;

mpfr_prec_t checked_prec(Bits bits) {
  if (bits < MPFR_PREC_MIN || bits > kMaxWorkingBits) {
    throw DomainError("precision out of range: " + std::to_string(bits));
  }
  return static_cast<mpfr_prec_t>(bits);
}

Bits wider(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }

// Grammar: [+-] (digits [. digits?] | . digits) ([eE] [+-] digits)?
bool well_formed_decimal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t int_digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++int_digits;
  std::size_t frac_digits = 0;
  if (i < s.size() && s[i] == '.') {
    ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++frac_digits;
  }
  if (int_digits + frac_digits == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    std::size_t exp_digits = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++exp_digits;
    if (exp_digits == 0) return false;
  }
  return i == s.size();
}

}  // namespace

BigReal::BigReal(Bits bits) {
  mpfr_init2(value_, checked_prec(bits));
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, Bits bits) {
  mpfr_init2(value_, checked_prec(bits));
  mpfr_set_si(value_, value, kRound);
}

BigReal::BigReal(const mpz_class& value, Bits bits) {
  mpfr_init2(value_, checked_prec(bits));
  mpfr_set_z(value_, value.get_mpz_t(), kRound);
}

BigReal::BigReal(const BigRational& value, Bits bits) {
  mpfr_init2(value_, checked_prec(bits));
  mpfr_set_q(value_, value.get().get_mpq_t(), kRound);
}

BigReal::BigReal(const BigReal& other, Bits bits) {
  mpfr_init2(value_, checked_prec(bits));
  mpfr_set(value_, other.value_, kRound);
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, kRound);
}

BigReal::BigReal(BigReal&& other) noexcept {
  // Leave `other` as a valid minimal-precision zero.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRound);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

BigReal BigReal::parse(std::string_view text, Bits bits) {
  if (!well_formed_decimal(text)) {
    throw FormatError("malformed decimal number: '" + std::string(text) + "'");
  }
  BigReal out(bits);
  const std::string owned(text);
  if (mpfr_set_str(out.value_, owned.c_str(), 10, kRound) != 0) {
    throw FormatError("malformed decimal number: '" + owned + "'");
  }
  return out;
}

std::string BigReal::to_string(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) < 0 ? "-inf" : "inf";
  if (mpfr_zero_p(value_)) return "0";
  if (digits <= 0) digits = decimal_digits_for_bits(precision());
  if (digits < 2) digits = 2;  // mpfr_get_str requires n >= 2

  mpfr_exp_t exp10 = 0;
  std::unique_ptr<char, void (*)(char*)> raw(
      mpfr_get_str(nullptr, &exp10, 10, static_cast<std::size_t>(digits), value_, kRound), mpfr_free_str);
  std::string mant(raw.get());
  const bool negative = mant.front() == '-';
  if (negative) mant.erase(0, 1);

  // value = 0.mant * 10^exp10 = d.ddd * 10^e
  const long e = static_cast<long>(exp10) - 1;
  const long n = static_cast<long>(mant.size());
  std::string out = negative ? "-" : "";
  if (e >= -5 && e < n) {
    if (e < 0) {
      out += "0.";
      out.append(static_cast<std::size_t>(-e - 1), '0');
      out += mant;
    } else {
      out += mant.substr(0, static_cast<std::size_t>(e + 1));
      if (e + 1 < n) {
        out += '.';
        out += mant.substr(static_cast<std::size_t>(e + 1));
      }
    }
  } else {
    out += mant[0];
    out += '.';
    out += mant.substr(1);
    out += 'e';
    out += e < 0 ? '-' : '+';
    out += std::to_string(e < 0 ? -e : e);
  }
  return out;
}

bool BigReal::identical(const BigReal& other) const {
  if (precision() != other.precision()) return false;
  if (mpfr_nan_p(value_) || mpfr_nan_p(other.value_)) return mpfr_nan_p(value_) && mpfr_nan_p(other.value_);
  return mpfr_equal_p(value_, other.value_) != 0 && mpfr_signbit(value_) == mpfr_signbit(other.value_);
}

BigReal BigReal::operator-() const {
  BigReal out(precision());
  mpfr_neg(out.value_, value_, kRound);
  return out;
}

BigReal& BigReal::operator+=(const BigReal& rhs) {
  BigReal out(wider(*this, rhs));
  mpfr_add(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  BigReal out(wider(*this, rhs));
  mpfr_sub(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  BigReal out(wider(*this, rhs));
  mpfr_mul(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  BigReal out(wider(*this, rhs));
  mpfr_div(out.value_, value_, rhs.value_, kRound);
  return *this = std::move(out);
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRound);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_si(value_, value_, rhs, kRound);
  return *this;
}

BigReal& BigReal::operator*=(const mpz_class& rhs) {
  mpfr_mul_z(value_, value_, rhs.get_mpz_t(), kRound);
  return *this;
}

BigReal& BigReal::operator/=(const mpz_class& rhs) {
  if (rhs == 0) throw DomainError("division by zero");
  mpfr_div_z(value_, value_, rhs.get_mpz_t(), kRound);
  return *this;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

BigReal abs(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_abs(out.get(), x.get(), kRound);
  return out;
}

BigReal log(const BigReal& x) {
  if (x.sign() <= 0) throw DomainError("log of a nonpositive number");
  BigReal out(x.precision());
  mpfr_log(out.get(), x.get(), kRound);
  return out;
}

BigReal exp(const BigReal& x) {
  BigReal out(x.precision());
  mpfr_exp(out.get(), x.get(), kRound);
  return out;
}

BigReal sqrt(const BigReal& x) {
  if (x.sign() < 0) throw DomainError("sqrt of a negative number");
  BigReal out(x.precision());
  mpfr_sqrt(out.get(), x.get(), kRound);
  return out;
}

BigReal pow(const BigReal& x, unsigned long e) {
  BigReal out(x.precision());
  mpfr_pow_ui(out.get(), x.get(), e, kRound);
  return out;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal out(x.precision());
  mpfr_mul_2si(out.get(), x.get(), e, kRound);
  return out;
}

BigReal log_of(unsigned long k, Bits bits) {
  if (k == 0) throw DomainError("log of zero");
  BigReal out(bits);
  mpfr_log_ui(out.get(), k, kRound);
  return out;
}

BigReal const_pi(Bits bits) {
  BigReal out(bits);
  mpfr_const_pi(out.get(), kRound);
  return out;
}

BigReal pow2(long e, Bits bits) {
  BigReal out(1L, bits);
  mpfr_mul_2si(out.get(), out.get(), e, kRound);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal scaled_difference(const BigReal& a, const BigReal& b, const BigReal& reference) {
  const Bits bits = std::max(a.precision(), b.precision());
  BigReal scale = max(BigReal(1L, bits), abs(reference));
  return abs(a - b) / scale;
}

BigReal ulp(const BigReal& x) {
  if (x.is_zero()) {
    BigReal out(x.precision());
    mpfr_set_ui_2exp(out.get(), 1, mpfr_get_emin(), kRound);
    return out;
  }
  return pow2(x.exponent() - x.precision(), x.precision());
}

BigReal round_to_target(const BigReal& x, Bits target_bits) {
  if (x.is_zero() || !x.is_finite()) return BigReal(x, target_bits);
  const Bits bits = target_bits + std::min<long>(0, x.exponent());
  if (bits < 1) return BigReal(target_bits);  // below the resolution: rounds to zero
  return BigReal(x, bits);
}

}  // namespace zl
