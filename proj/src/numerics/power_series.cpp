#include "zetalaurent/numerics/power_series.hpp"

#include <string>

#include "zetalaurent/errors.hpp"

namespace zl {

PowerSeries::PowerSeries(std::size_t order, Bits bits) : coefficients_(order + 1, BigReal(bits)), bits_(bits) {}

PowerSeries::PowerSeries(std::span<const BigReal> coefficients, Bits bits) : bits_(bits) {
  if (coefficients.empty()) throw DomainError("power series needs at least one coefficient");
  coefficients_.reserve(coefficients.size());
  for (const auto& c : coefficients) coefficients_.emplace_back(c, bits);
}

PowerSeries PowerSeries::unit(std::size_t order, Bits bits) {
  PowerSeries out(order, bits);
  out.coefficients_[0] = BigReal(1L, bits);
  return out;
}

void PowerSeries::set(std::size_t i, const BigReal& value) { coefficients_.at(i) = BigReal(value, bits_); }

BigReal PowerSeries::evaluate(const BigReal& s) const {
  BigReal acc(bits_);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc *= s;
    acc += *it;
  }
  return acc;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  if (rhs.order() != order()) {
    throw OrderMismatchError("series orders differ: " + std::to_string(order()) + " vs " + std::to_string(rhs.order()));
  }
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    coefficients_[i] = BigReal(coefficients_[i] + rhs.coefficients_[i], bits_);
  }
  return *this;
}

PowerSeries& PowerSeries::operator*=(const BigReal& scale) {
  for (auto& c : coefficients_) c = BigReal(c * scale, bits_);
  return *this;
}

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b) {
  if (a.order() != b.order()) {
    throw OrderMismatchError("series orders differ: " + std::to_string(a.order()) + " vs " +
                             std::to_string(b.order()));
  }
  const Bits bits = std::max(a.precision(), b.precision());
  const std::size_t n = a.order();
  PowerSeries out(n, bits);
  for (std::size_t k = 0; k <= n; ++k) {
    BigReal acc(bits);
    for (std::size_t i = 0; i <= k; ++i) {
      if (a[i].is_zero() || b[k - i].is_zero()) continue;
      acc += a[i] * b[k - i];
    }
    out.set(k, acc);
  }
  return out;
}

PowerSeries series_recip(const PowerSeries& a) {
  if (a[0].is_zero()) throw NonInvertibleError("series with zero constant term has no reciprocal");
  const Bits bits = a.precision();
  const std::size_t n = a.order();
  PowerSeries out(n, bits);
  const BigReal inv0 = BigReal(1L, bits) / a[0];
  out.set(0, inv0);
  // b_k = -(1/a_0) sum_{i=1}^{k} a_i b_{k-i}
  for (std::size_t k = 1; k <= n; ++k) {
    BigReal acc(bits);
    for (std::size_t i = 1; i <= k; ++i) {
      if (a[i].is_zero()) continue;
      acc += a[i] * out[k - i];
    }
    out.set(k, -(acc * inv0));
  }
  return out;
}

PowerSeries series_derivative(const PowerSeries& a) {
  const std::size_t n = a.order();
  if (n == 0) return PowerSeries(0, a.precision());
  PowerSeries out(n - 1, a.precision());
  for (std::size_t i = 0; i + 1 <= n; ++i) out.set(i, a[i + 1] * static_cast<long>(i + 1));
  return out;
}

PowerSeries exp_neg_log_series(unsigned long x, std::size_t order, Bits bits) {
  PowerSeries out = PowerSeries::unit(order, bits);
  const BigReal neg_log = -log_of(x, bits);
  BigReal term(1L, bits);
  for (std::size_t j = 1; j <= order; ++j) {
    term *= neg_log;
    term /= static_cast<long>(j);
    out.set(j, term);
  }
  return out;
}

}  // namespace zl
