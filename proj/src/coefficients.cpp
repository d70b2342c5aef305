#include "zetalaurent/coefficients.hpp"

#include <algorithm>
#include <cmath>

#include "detail/monomials.hpp"
#include "detail/table_io.hpp"
#include "zetalaurent/errors.hpp"
#include "zetalaurent/numerics/power_series.hpp"

namespace zl {
namespace {

BigInt factorial_product(const MultiplicityVector& k) {
  BigInt out = 1;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] > 1) out *= factorial(k[i]);
  }
  return out;
}

void require_positive(unsigned n) {
  if (n == 0) throw DomainError("index n must be at least 1");
}

std::vector<BigReal> lifted(const std::vector<BigReal>& values, std::size_t count, Bits bits) {
  std::vector<BigReal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(values[i], bits);
  return out;
}

}  // namespace

std::string to_string(EtaProvenance p) {
  switch (p) {
    case EtaProvenance::recurrence: return "recurrence";
    case EtaProvenance::explicit_formula: return "explicit";
    case EtaProvenance::series_oracle: return "series_oracle";
    case EtaProvenance::limit_definition: return "limit_definition";
  }
  return "recurrence";
}

EtaProvenance parse_eta_provenance(std::string_view text) {
  if (text == "recurrence") return EtaProvenance::recurrence;
  if (text == "explicit") return EtaProvenance::explicit_formula;
  if (text == "series_oracle") return EtaProvenance::series_oracle;
  if (text == "limit_definition") return EtaProvenance::limit_definition;
  throw FormatError("unknown eta provenance '" + std::string(text) + "'");
}

EtaTable::EtaTable(EtaProvenance provenance, std::vector<BigReal> values, Bits precision_bits)
    : provenance_(provenance), values_(std::move(values)), precision_bits_(precision_bits) {
  if (values_.empty()) throw TableError("eta table needs at least one value");
  if (precision_bits < 1) throw TableError("eta table precision must be positive");
}

void EtaTable::require(int n_max) const {
  if (this->n_max() < n_max) {
    throw TableError("eta table reaches n=" + std::to_string(this->n_max()) + ", need n=" + std::to_string(n_max));
  }
}

std::string format_eta_table(const EtaTable& table, TableFormat format) {
  detail::RawTable raw;
  raw.tag_key = "provenance";
  raw.tag_value = to_string(table.provenance());
  raw.precision_bits = table.precision_bits();
  raw.n_max = table.n_max();
  // A value held at less than the table precision prints only its own digits.
  for (const auto& v : table.values()) {
    raw.values.push_back(v.to_string(decimal_digits_for_bits(std::min(v.precision(), table.precision_bits()))));
  }
  return format == TableFormat::json ? detail::write_json(raw) : detail::write_csv(raw);
}

EtaTable parse_eta_table(std::string_view text) {
  const detail::RawTable raw = detail::read_table(text, "provenance");
  const EtaProvenance provenance = parse_eta_provenance(raw.tag_value);
  std::vector<BigReal> values;
  values.reserve(raw.values.size());
  for (const auto& s : raw.values) values.push_back(BigReal::parse(s, raw.precision_bits));
  return EtaTable(provenance, std::move(values), raw.precision_bits);
}

EtaTable load_eta_table(const std::filesystem::path& path) { return parse_eta_table(detail::read_file(path)); }

void save_eta_table(const EtaTable& table, const std::filesystem::path& path) {
  detail::write_file(path, format_eta_table(table, format_for_path(path)));
}

BigInt modified_gamma(std::uint64_t p) { return p == 0 ? BigInt(1) : factorial(static_cast<unsigned long>(p - 1)); }

BigRational eta_term_coefficient(const MultiplicityVector& k, unsigned n) {
  BigInt num = modified_gamma(k.p()) * n;
  if (k.p() % 2 == 1) num = -num;
  return BigRational(num, factorial_product(k));
}

BigRational gamma_term_coefficient(const MultiplicityVector& k) {
  BigInt den = factorial_product(k);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] == 0) continue;
    BigInt base = static_cast<unsigned long>(i + 1);
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), k[i]);
    den *= pw;
  }
  return BigRational(k.p() % 2 == 1 ? BigInt(-1) : BigInt(1), den);
}

BigRational lambda_term_coefficient(const MultiplicityVector& k, unsigned n) {
  BigInt num = modified_gamma(k.p()) * binomial(n, static_cast<unsigned long>(k.r())) * BigInt(static_cast<unsigned long>(k.r()));
  // -(-1)^p
  if (k.p() % 2 == 0) num = -num;
  return BigRational(num, factorial_product(k));
}

EtaTable eta_from_gamma_recurrence(const GammaTable& g, int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  g.require(Convention::paper, n_max);
  const Bits w = ctx.working_bits();
  const auto n_count = static_cast<std::size_t>(n_max) + 1;
  const std::vector<BigReal> gamma = lifted(g.values(), n_count, w);

  std::vector<BigReal> eta;
  eta.reserve(n_count);
  for (std::size_t n = 0; n < n_count; ++n) {
    BigReal acc = gamma[n] * static_cast<long>(n + 1);
    for (std::size_t k = 0; k < n; ++k) acc += eta[k] * gamma[n - k - 1];
    eta.push_back(-acc);
  }
  return EtaTable(EtaProvenance::recurrence, std::move(eta), w);
}

BigReal eta_from_gamma_explicit(const GammaTable& g, unsigned n, const PrecisionContext& ctx) {
  require_positive(n);
  g.require(Convention::paper, static_cast<int>(n) - 1);
  const Bits w = ctx.working_bits();
  detail::PowerCache powers(std::span(g.values()).first(n), w);
  BigReal sum(w);
  for (const auto& k : enumerate_constrained(n)) {
    sum += BigReal(eta_term_coefficient(k, n), w) * powers.monomial(k);
  }
  return sum;
}

EtaTable eta_table_explicit(const GammaTable& g, int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  g.require(Convention::paper, n_max);
  std::vector<BigReal> eta;
  for (int n = 0; n <= n_max; ++n) eta.push_back(eta_from_gamma_explicit(g, static_cast<unsigned>(n + 1), ctx));
  return EtaTable(EtaProvenance::explicit_formula, std::move(eta), ctx.working_bits());
}

BigReal gamma_from_eta_explicit(const EtaTable& e, unsigned n, const PrecisionContext& ctx) {
  require_positive(n);
  e.require(static_cast<int>(n) - 1);
  const Bits w = ctx.working_bits();
  detail::PowerCache powers(std::span(e.values()).first(n), w);
  BigReal sum(w);
  for (const auto& k : enumerate_constrained(n)) {
    sum += BigReal(gamma_term_coefficient(k), w) * powers.monomial(k);
  }
  return sum;
}

GammaTable gamma_table_from_eta(const EtaTable& e, int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  e.require(n_max);
  std::vector<BigReal> gamma;
  for (int n = 0; n <= n_max; ++n) gamma.push_back(gamma_from_eta_explicit(e, static_cast<unsigned>(n + 1), ctx));
  return GammaTable(Convention::paper, std::move(gamma), ctx.working_bits());
}

EtaTable eta_series_oracle(const GammaTable& g, int n_max, const PrecisionContext& ctx) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  g.require(Convention::paper, n_max);
  const Bits w = ctx.working_bits();
  const auto order = static_cast<std::size_t>(n_max);

  // A(s) = 1 + sum gamma_i s^{i+1}, kept to order N + 1 for A'.
  PowerSeries a = PowerSeries::unit(order + 1, w);
  for (std::size_t i = 0; i <= order; ++i) a.set(i + 1, g[i]);
  const PowerSeries da = series_derivative(a);
  const PowerSeries a_trunc(a.coefficients().first(order + 1), w);
  const PowerSeries ratio = series_mul(da, series_recip(a_trunc));

  std::vector<BigReal> eta;
  for (std::size_t i = 0; i <= order; ++i) eta.push_back(-ratio[i]);
  return EtaTable(EtaProvenance::series_oracle, std::move(eta), w);
}

std::optional<unsigned long> prime_power_base(unsigned long k) {
  if (k < 2) return std::nullopt;
  const auto is_prime = [](unsigned long b) {
    if (b < 2) return false;
    for (unsigned long d = 2; d <= b / d; ++d) {
      if (b % d == 0) return false;
    }
    return true;
  };
  const BigInt kz(k);
  for (unsigned long m = 1; (1UL << std::min<unsigned long>(m, 63)) <= k && m < 64; ++m) {
    BigInt root;
    if (mpz_root(root.get_mpz_t(), kz.get_mpz_t(), m) == 0) continue;  // not an exact m-th power
    const unsigned long base = root.get_ui();
    if (is_prime(base)) return base;
  }
  return std::nullopt;
}

BigReal von_mangoldt(unsigned long k, Bits bits) {
  if (k == 0) throw DomainError("von Mangoldt function needs k >= 1");
  const auto base = prime_power_base(k);
  if (!base) return BigReal(bits);
  return log_of(*base, bits);
}

BigReal eta_limit_definition(int n, unsigned long x_max, const PrecisionContext& ctx) {
  if (n < 0) throw DomainError("n must be nonnegative");
  if (x_max < 2) throw DomainError("x_max must be at least 2");
  const Bits w = ctx.working_bits();
  const auto power = static_cast<unsigned long>(n);

  // base[k] = p when k = p^m, else 0 (sieve of smallest prime factors).
  std::vector<std::uint32_t> spf(x_max + 1, 0);
  for (unsigned long i = 2; i <= x_max; ++i) {
    if (spf[i] != 0) continue;
    for (unsigned long j = i; j <= x_max; j += i) {
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
    }
  }

  BigReal sum(w);
  for (unsigned long k = 2; k <= x_max; ++k) {
    const unsigned long p = spf[k];
    unsigned long rest = k;
    unsigned long m = 0;
    while (rest % p == 0) rest /= p, ++m;
    if (rest != 1) continue;
    const BigReal log_p = log_of(p, w);
    BigReal term = power == 0 ? log_p : log_p * pow(log_p * static_cast<long>(m), power);
    term /= BigReal(BigInt(k), w);
    sum += term;
  }
  BigReal trend = pow(log_of(x_max, w), power + 1) / static_cast<long>(power + 1);
  BigReal out = (sum - trend) / factorial(power);
  return n % 2 == 0 ? out : -out;
}

EtaTable eta_table_limit(int n_max, unsigned long x_max, const PrecisionContext& ctx) {
  if (n_max < 0) throw DomainError("n_max must be nonnegative");
  std::vector<BigReal> eta;
  for (int n = 0; n <= n_max; ++n) eta.push_back(eta_limit_definition(n, x_max, ctx));
  return EtaTable(EtaProvenance::limit_definition, std::move(eta), ctx.working_bits());
}

SymbolicExpansion expand_eta_symbolic(unsigned n) {
  require_positive(n);
  std::vector<SymbolicTerm> terms;
  for (const auto& k : enumerate_constrained(n)) terms.push_back({k, eta_term_coefficient(k, n)});
  return SymbolicExpansion(SymbolicTarget::eta, n, std::move(terms));
}

SymbolicExpansion expand_gamma_symbolic(unsigned n) {
  require_positive(n);
  std::vector<SymbolicTerm> terms;
  for (const auto& k : enumerate_constrained(n)) terms.push_back({k, gamma_term_coefficient(k)});
  return SymbolicExpansion(SymbolicTarget::gamma, n, std::move(terms));
}

}  // namespace zl
