#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "zetalaurent/numerics/big_real.hpp"

namespace zl {

/// Truncated formal power series c_0 + c_1 s + ... + c_N s^N, all
/// coefficients held at one precision.
class PowerSeries {
 public:
  /// Zero series of order N.
  PowerSeries(std::size_t order, Bits bits);
  /// Throws DomainError for an empty coefficient list. Coefficients are
  /// rounded to `bits`.
  PowerSeries(std::span<const BigReal> coefficients, Bits bits);

  /// 1 + 0 s + ... of order N.
  static PowerSeries unit(std::size_t order, Bits bits);

  std::size_t order() const { return coefficients_.size() - 1; }
  Bits precision() const { return bits_; }

  const BigReal& operator[](std::size_t i) const { return coefficients_[i]; }
  /// Assigns coefficient i, rounding to the series precision.
  void set(std::size_t i, const BigReal& value);
  std::span<const BigReal> coefficients() const { return coefficients_; }

  /// Horner evaluation at s.
  BigReal evaluate(const BigReal& s) const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator*=(const BigReal& scale);

 private:
  std::vector<BigReal> coefficients_;
  Bits bits_;
};

/// Cauchy product truncated at the common order. Throws OrderMismatchError.
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// Multiplicative inverse modulo s^{N+1}. Throws NonInvertibleError when the
/// constant term is zero.
PowerSeries series_recip(const PowerSeries& a);

/// Term-by-term derivative, truncated at N-1 (order 0 input gives the zero
/// series of order 0).
PowerSeries series_derivative(const PowerSeries& a);

/// exp(-s * ln x) = sum_j (-ln x)^j / j! s^j, truncated at N.
PowerSeries exp_neg_log_series(unsigned long x, std::size_t order, Bits bits);

}  // namespace zl
