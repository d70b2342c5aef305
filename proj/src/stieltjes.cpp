#include "zetalaurent/stieltjes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "detail/table_io.hpp"
#include "zetalaurent/errors.hpp"
#include "zetalaurent/numerics/bernoulli.hpp"
#include "zetalaurent/numerics/big_rational.hpp"
#include "zetalaurent/numerics/power_series.hpp"

namespace zl {
namespace {

Bits ceil_log2(double x) { return x <= 1.0 ? 0 : static_cast<Bits>(std::ceil(std::log2(x))); }

// Upper bound for log2 |B_{2m}| from |B_{2m}| = 2 (2m)! zeta(2m) / (2 pi)^{2m}.
double log2_abs_bernoulli_bound(int two_m) {
  return std::log2(2.0 * std::numbers::pi * std::numbers::pi / 6.0) + std::lgamma(two_m + 1.0) / std::numbers::ln2 -
         two_m * std::log2(2.0 * std::numbers::pi);
}

double log2_backlund_bound(unsigned long m, int j) {
  return std::log2((2.0 * j + 3.0) / (2.0 * j + 1.0)) + log2_abs_bernoulli_bound(2 * j + 2) -
         (2.0 * j + 1.0) * std::log2(static_cast<double>(m));
}

Bits rounding_loss(unsigned long m, int j, int n_max) {
  return 2 * ceil_log2(static_cast<double>(m)) + ceil_log2(static_cast<double>(n_max + j + 2)) + 4;
}

}  // namespace

std::string to_string(Convention c) { return c == Convention::paper ? "paper" : "classic"; }

Convention parse_convention(std::string_view text) {
  if (text == "paper") return Convention::paper;
  if (text == "classic") return Convention::classic;
  throw FormatError("unknown convention '" + std::string(text) + "' (expected paper or classic)");
}

GammaTable::GammaTable(Convention convention, std::vector<BigReal> values, Bits precision_bits)
    : convention_(convention), values_(std::move(values)), precision_bits_(precision_bits) {
  if (values_.empty()) throw TableError("gamma table needs at least one value");
  if (precision_bits < 1) throw TableError("gamma table precision must be positive");
}

void GammaTable::require(Convention convention, int n_max) const {
  if (convention_ != convention) {
    throw TableError("gamma table is in the " + to_string(convention_) + " convention, expected " +
                     to_string(convention));
  }
  if (this->n_max() < n_max) {
    throw TableError("gamma table reaches n=" + std::to_string(this->n_max()) + ", need n=" + std::to_string(n_max));
  }
}

EulerMaclaurinPlan plan_euler_maclaurin(int n_max, Bits target_bits) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  const double goal = -static_cast<double>(target_bits + 8);
  const unsigned long m_cap = static_cast<unsigned long>(std::max<Bits>(64, 2 * target_bits));

  EulerMaclaurinPlan best;
  double best_cost = std::numeric_limits<double>::infinity();
  for (unsigned long m = 2; m <= m_cap; ++m) {
    // Past 2J + 2 ~ 2 pi M the bound grows again.
    const int j_cap = static_cast<int>(std::numbers::pi * static_cast<double>(m)) + 2;
    for (int j = 1; j <= j_cap; ++j) {
      const double bound = log2_backlund_bound(m, j);
      if (bound >= goal) continue;
      const double cost = static_cast<double>(m) + 2.0 * j;
      if (cost < best_cost) {
        best_cost = cost;
        best = {m, j, bound, rounding_loss(m, j, n_max)};
      }
      break;
    }
  }
  if (best.terms == 0) throw PrecisionInfeasibleError("no Euler-Maclaurin plan reaches the target precision");
  return best;
}

GammaTable compute_gamma_table(int n_max, const PrecisionContext& ctx) {
  return compute_gamma_table(n_max, ctx, plan_euler_maclaurin(n_max, ctx.target_bits()));
}

GammaTable compute_gamma_table(int n_max, const PrecisionContext& ctx, const EulerMaclaurinPlan& plan) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  if (plan.terms < 2 || plan.corrections < 1) throw DomainError("Euler-Maclaurin plan needs M >= 2 and J >= 1");
  const double bound = log2_backlund_bound(plan.terms, plan.corrections);
  if (bound >= -static_cast<double>(ctx.target_bits() + 8)) {
    throw PrecisionInfeasibleError("Euler-Maclaurin truncation bound 2^" + std::to_string(bound) +
                                   " does not reach the target precision");
  }
  const Bits loss = rounding_loss(plan.terms, plan.corrections, n_max);
  if (ctx.guard_bits() < loss) {
    throw PrecisionInfeasibleError("guard bits " + std::to_string(ctx.guard_bits()) + " cannot absorb the " +
                                   std::to_string(loss) + " bits of rounding loss of the Euler-Maclaurin sum");
  }

  const Bits w = ctx.working_bits();
  const auto n = static_cast<std::size_t>(n_max);
  const unsigned long m = plan.terms;
  std::vector<BigReal> coeff(n + 1, BigReal(w));

  // sum_{k<M} k^{-1} exp(-s ln k)
  coeff[0] += BigReal(1L, w);
  for (unsigned long k = 2; k < m; ++k) {
    const BigReal neg_log = -log_of(k, w);
    BigReal term = BigReal(1L, w) / BigReal(static_cast<long>(k), w);
    coeff[0] += term;
    for (std::size_t j = 1; j <= n; ++j) {
      term *= neg_log;
      term /= static_cast<long>(j);
      coeff[j] += term;
    }
  }

  // (M^{-s} - 1)/s = sum_{i>=0} (-ln M)^{i+1} / (i+1)! s^i
  {
    const BigReal neg_log_m = -log_of(m, w);
    BigReal term(1L, w);
    for (std::size_t i = 0; i <= n; ++i) {
      term *= neg_log_m;
      term /= static_cast<long>(i + 1);
      coeff[i] += term;
    }
  }

  // M^{-s} * [ 1/(2M) + sum_j B_{2j}/(2j)! M^{-2j} (1+s)...(2j-1+s) ]
  PowerSeries tail(n, w);
  tail.set(0, BigReal(1L, w) / BigReal(static_cast<long>(2 * m), w));
  const auto bern = bernoulli_table(2 * plan.corrections);
  const BigReal inv_m2 = BigReal(1L, w) / BigReal(BigInt(m) * BigInt(m), w);
  BigReal m_pow = BigReal(1L, w);
  std::vector<BigReal> rising(n + 1, BigReal(w));  // (1+s)(2+s)...(2j-1+s)
  rising[0] = BigReal(1L, w);
  for (int j = 1; j <= plan.corrections; ++j) {
    // multiply by (a + s) for a = 2j-2+1 (j = 1) or a = 2j-2, 2j-1
    const int first = j == 1 ? 1 : 2 * j - 2;
    for (int a = first; a <= 2 * j - 1; ++a) {
      for (std::size_t i = n + 1; i-- > 0;) {
        BigReal next = rising[i] * static_cast<long>(a);
        if (i > 0) next += rising[i - 1];
        rising[i] = std::move(next);
      }
    }
    m_pow *= inv_m2;
    const BigReal weight =
        BigReal(bern[static_cast<std::size_t>(2 * j)] / BigRational(factorial(static_cast<unsigned long>(2 * j))), w) *
        m_pow;
    for (std::size_t i = 0; i <= n; ++i) tail.set(i, tail[i] + rising[i] * weight);
  }
  const PowerSeries tail_series = series_mul(tail, exp_neg_log_series(m, n, w));
  for (std::size_t i = 0; i <= n; ++i) coeff[i] += tail_series[i];

  return GammaTable(Convention::paper, std::move(coeff), w);
}

BigReal gamma_limit_definition(int n, unsigned long x_max, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (x_max < 2) throw DomainError("x_max must be at least 2");
  const Bits w = ctx.working_bits();
  const auto power = static_cast<unsigned long>(n);

  BigReal sum(w);
  BigReal term(w);
  if (n == 0) sum += BigReal(1L, w);  // (log 1)^0 / 1
  for (unsigned long k = 2; k <= x_max; ++k) {
    if (n == 0) {
      mpfr_ui_div(term.get(), 1, BigReal(static_cast<long>(k), w).get(), MPFR_RNDN);
    } else {
      mpfr_log_ui(term.get(), k, MPFR_RNDN);
      mpfr_pow_ui(term.get(), term.get(), power, MPFR_RNDN);
      mpfr_div_ui(term.get(), term.get(), k, MPFR_RNDN);
    }
    sum += term;
  }
  BigReal trend = pow(log_of(x_max, w), power + 1) / static_cast<long>(power + 1);
  BigReal out = (sum - trend) / factorial(power);
  return n % 2 == 0 ? out : -out;
}

GammaTable convert_convention(const GammaTable& table, Convention target) {
  if (table.convention() == target) return table;
  std::vector<BigReal> out;
  out.reserve(table.values().size());
  for (std::size_t n = 0; n < table.values().size(); ++n) {
    const BigInt fact = factorial(n);
    if (target == Convention::classic) {
      // Exact: a p-bit value times an integer of b bits fits in p + b bits.
      const Bits bits = table[n].precision() + static_cast<Bits>(mpz_sizeinbase(fact.get_mpz_t(), 2));
      BigReal v = BigReal(table[n], bits) * fact;
      out.push_back(n % 2 == 0 ? std::move(v) : -v);
    } else {
      BigReal v = BigReal(table[n], std::max(table[n].precision(), table.precision_bits())) / fact;
      v = BigReal(v, table.precision_bits());
      out.push_back(n % 2 == 0 ? std::move(v) : -v);
    }
  }
  GammaTable converted(target, std::move(out), table.precision_bits());
  return converted;
}

TableFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? TableFormat::csv : TableFormat::json;
}

std::string format_table(const GammaTable& table, TableFormat format) {
  detail::RawTable raw;
  raw.tag_key = "convention";
  raw.tag_value = to_string(table.convention());
  raw.precision_bits = table.precision_bits();
  raw.n_max = table.n_max();
  // A value held at less than the table precision prints only its own digits.
  for (const auto& v : table.values()) {
    raw.values.push_back(v.to_string(decimal_digits_for_bits(std::min(v.precision(), table.precision_bits()))));
  }
  return format == TableFormat::json ? detail::write_json(raw) : detail::write_csv(raw);
}

GammaTable parse_gamma_table(std::string_view text) {
  const detail::RawTable raw = detail::read_table(text, "convention");
  const Convention convention = parse_convention(raw.tag_value);
  std::vector<BigReal> values;
  values.reserve(raw.values.size());
  for (const auto& s : raw.values) values.push_back(BigReal::parse(s, raw.precision_bits));
  return GammaTable(convention, std::move(values), raw.precision_bits);
}

GammaTable load_table(const std::filesystem::path& path) { return parse_gamma_table(detail::read_file(path)); }

void save_table(const GammaTable& table, const std::filesystem::path& path) {
  save_table(table, path, format_for_path(path));
}

void save_table(const GammaTable& table, const std::filesystem::path& path, TableFormat format) {
  detail::write_file(path, format_table(table, format));
}

}  // namespace zl
