#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "zetalaurent/coefficients.hpp"
#include "zetalaurent/numerics/big_real.hpp"
#include "zetalaurent/numerics/precision.hpp"
#include "zetalaurent/stieltjes.hpp"
#include "zetalaurent/symbolic.hpp"

namespace zl {

enum class LambdaMethod { binomial, explicit_formula };

std::string to_string(LambdaMethod m);
LambdaMethod parse_lambda_method(std::string_view text);

/// Oscillating part of Li's n-th number from the binomial transform
///   lambda~_n = -sum_{j=1}^{n} C(n, j) eta_{j-1}.
///
/// The sum is evaluated twice, at ctx.working_bits() and 64 bits above it.
/// If the two disagree by 2^-target_bits * max(1, |lambda~_n|) or more the
/// digits are not trustworthy and PrecisionInfeasibleError is thrown.
BigReal lambda_tilde_binomial(const EtaTable& e, unsigned n, const PrecisionContext& ctx);

/// lambda~_n directly from the Stieltjes constants:
///   -sum_{1 <= r(k) <= n} G(p) C(n, r) r prod (-gamma_i)^{k_i} / k_i!
/// with terms visited r = 1, ..., n and canonical order within each r.
BigReal lambda_tilde_explicit(const GammaTable& g, unsigned n, const PrecisionContext& ctx);

/// lambda~_n in terms of gamma_0 .. gamma_{n-1}; integer coefficients, one
/// term per multiplicity vector with 1 <= r <= n.
SymbolicExpansion expand_lambda_symbolic(unsigned n);

/// c = (gamma_0 - 1 - ln 2 pi) / 2 with gamma_0 computed at ctx.
BigReal trend_constant(const PrecisionContext& ctx);

/// Asymptotic trend (1 + n ln n)/2 + c n.
BigReal lambda_trend(unsigned n, const PrecisionContext& ctx);

/// Individual contributions to lambda~_n, negated so that they sum to
/// -lambda~_n: value = G(p) C(n, r) r prod (-gamma_i)^{k_i} / k_i!.
struct TermDistribution {
  unsigned n = 0;
  std::vector<BigReal> term_values;
};

TermDistribution term_distribution(const GammaTable& g, unsigned n, const PrecisionContext& ctx);

struct HistogramBin {
  BigReal lower;
  BigReal upper;
  std::size_t count = 0;
};

/// Equal-width bins over [min, max]. A value on an inner edge goes to the
/// upper bin; the maximum goes to the last bin. Throws DomainError for an
/// empty distribution or zero bins.
std::vector<HistogramBin> histogram(const TermDistribution& d, unsigned bins);

/// Index of the bin whose [lower, upper) range contains zero (the last bin
/// is closed), or -1 when zero is outside [min, max].
int bin_containing_zero(const std::vector<HistogramBin>& bins);

/// Trend plus oscillation. `estimate` is only an asymptotic estimate of
/// lambda_n because the trend is known here only asymptotically.
struct LambdaRecord {
  unsigned n = 0;
  BigReal lambda_tilde;
  BigReal trend;
  BigReal estimate;
  LambdaMethod method = LambdaMethod::explicit_formula;
};

LambdaRecord lambda_estimate(const GammaTable& g, unsigned n, LambdaMethod method, const PrecisionContext& ctx);

}  // namespace zl
