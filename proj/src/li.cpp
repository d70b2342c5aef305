#include "zetalaurent/li.hpp"

#include <algorithm>

#include "detail/monomials.hpp"
#include "zetalaurent/errors.hpp"

namespace zl {
namespace {

BigReal binomial_sum(const EtaTable& e, unsigned n, Bits bits) {
  BigReal sum(bits);
  for (unsigned j = 1; j <= n; ++j) {
    sum += BigReal(e[j - 1], bits) * binomial(n, j);
  }
  return -sum;
}

// a + b carried at a precision wide enough that the sum is exact.
BigReal exact_sum(const BigReal& a, const BigReal& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const long hi = std::max(a.exponent(), b.exponent());
  const long lo = std::min(a.exponent() - a.precision(), b.exponent() - b.precision());
  BigReal out(static_cast<Bits>(hi - lo + 2));
  mpfr_add(out.get(), a.get(), b.get(), MPFR_RNDN);
  return out;
}

}  // namespace

std::string to_string(LambdaMethod m) { return m == LambdaMethod::binomial ? "binomial" : "explicit"; }

LambdaMethod parse_lambda_method(std::string_view text) {
  if (text == "binomial") return LambdaMethod::binomial;
  if (text == "explicit") return LambdaMethod::explicit_formula;
  throw FormatError("unknown lambda method '" + std::string(text) + "' (expected binomial or explicit)");
}

BigReal lambda_tilde_binomial(const EtaTable& e, unsigned n, const PrecisionContext& ctx) {
  if (n == 0) throw DomainError("lambda~_n needs n >= 1");
  e.require(static_cast<int>(n) - 1);
  BigReal value = binomial_sum(e, n, ctx.working_bits());
  const BigReal check = binomial_sum(e, n, ctx.working_bits() + 64);
  const BigReal drift = scaled_difference(value, check, check);
  if (drift >= pow2(-ctx.target_bits(), ctx.working_bits())) {
    throw PrecisionInfeasibleError("lambda~_" + std::to_string(n) + " moved by " + drift.to_string(6) +
                                   " when recomputed with 64 more guard bits; raise the guard bits");
  }
  return value;
}

BigReal lambda_tilde_explicit(const GammaTable& g, unsigned n, const PrecisionContext& ctx) {
  if (n == 0) throw DomainError("lambda~_n needs n >= 1");
  g.require(Convention::paper, static_cast<int>(n) - 1);
  const Bits w = ctx.working_bits();
  detail::PowerCache powers(std::span(g.values()).first(n), w);
  BigReal sum(w);
  for (unsigned r = 1; r <= n; ++r) {
    for (const auto& k : enumerate_constrained(r)) {
      sum += BigReal(lambda_term_coefficient(k, n), w) * powers.monomial(k);
    }
  }
  return sum;
}

SymbolicExpansion expand_lambda_symbolic(unsigned n) {
  if (n == 0) throw DomainError("lambda~_n needs n >= 1");
  std::vector<SymbolicTerm> terms;
  for (unsigned r = 1; r <= n; ++r) {
    for (const auto& k : enumerate_constrained(r)) {
      const MultiplicityVector padded = k.resized(n + 1);
      terms.push_back({padded, lambda_term_coefficient(padded, n)});
    }
  }
  return SymbolicExpansion(SymbolicTarget::lambda_tilde, n, std::move(terms));
}

BigReal trend_constant(const PrecisionContext& ctx) {
  const Bits w = ctx.working_bits();
  const GammaTable g = compute_gamma_table(0, ctx);
  const BigReal two_pi = const_pi(w) * 2L;
  return (BigReal(g[0], w) - BigReal(1L, w) - log(two_pi)) / 2L;
}

BigReal lambda_trend(unsigned n, const PrecisionContext& ctx) {
  if (n == 0) throw DomainError("trend needs n >= 1");
  const Bits w = ctx.working_bits();
  const BigReal c = trend_constant(ctx);
  const BigReal n_real(static_cast<long>(n), w);
  const BigReal half_growth = (BigReal(1L, w) + n_real * log_of(n, w)) / 2L;
  return half_growth + c * n_real;
}

TermDistribution term_distribution(const GammaTable& g, unsigned n, const PrecisionContext& ctx) {
  if (n == 0) throw DomainError("term distribution needs n >= 1");
  g.require(Convention::paper, static_cast<int>(n) - 1);
  const Bits w = ctx.working_bits();
  detail::PowerCache powers(std::span(g.values()).first(n), w);
  TermDistribution out;
  out.n = n;
  for (unsigned r = 1; r <= n; ++r) {
    for (const auto& k : enumerate_constrained(r)) {
      out.term_values.push_back(-(BigReal(lambda_term_coefficient(k, n), w) * powers.monomial(k)));
    }
  }
  return out;
}

std::vector<HistogramBin> histogram(const TermDistribution& d, unsigned bins) {
  if (bins == 0) throw DomainError("histogram needs at least one bin");
  if (d.term_values.empty()) throw DomainError("histogram of an empty distribution");
  const auto [lo_it, hi_it] = std::minmax_element(d.term_values.begin(), d.term_values.end());
  const Bits bits = lo_it->precision();
  const BigReal lo(*lo_it, bits);
  const BigReal hi(*hi_it, bits);
  const BigReal width = (hi - lo) / static_cast<long>(bins);

  std::vector<BigReal> edges;
  edges.reserve(bins + 1);
  for (unsigned i = 0; i < bins; ++i) edges.push_back(lo + width * static_cast<long>(i));
  edges.push_back(hi);

  std::vector<HistogramBin> out;
  out.reserve(bins);
  for (unsigned i = 0; i < bins; ++i) out.push_back({edges[i], edges[i + 1], 0});
  for (const auto& v : d.term_values) {
    // Largest i < bins with edges[i] <= v.
    const auto it = std::upper_bound(edges.begin(), edges.begin() + bins, v);
    const auto index = static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - edges.begin() - 1));
    ++out[index].count;
  }
  return out;
}

int bin_containing_zero(const std::vector<HistogramBin>& bins) {
  for (std::size_t i = 0; i < bins.size(); ++i) {
    const bool last = i + 1 == bins.size();
    if (bins[i].lower.sign() <= 0 && (bins[i].upper.sign() > 0 || (last && bins[i].upper.sign() >= 0))) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

LambdaRecord lambda_estimate(const GammaTable& g, unsigned n, LambdaMethod method, const PrecisionContext& ctx) {
  if (n == 0) throw DomainError("lambda~_n needs n >= 1");
  LambdaRecord rec;
  rec.n = n;
  rec.method = method;
  if (method == LambdaMethod::binomial) {
    const EtaTable eta = eta_from_gamma_recurrence(g, static_cast<int>(n) - 1, ctx);
    rec.lambda_tilde = lambda_tilde_binomial(eta, n, ctx);
  } else {
    rec.lambda_tilde = lambda_tilde_explicit(g, n, ctx);
  }
  rec.trend = lambda_trend(n, ctx);
  rec.estimate = exact_sum(rec.trend, rec.lambda_tilde);
  return rec;
}

}  // namespace zl
