#include "verify.hpp"

#include <optional>

#include "zetalaurent/coefficients.hpp"
#include "zetalaurent/li.hpp"
#include "zetalaurent/partitions.hpp"
#include "zetalaurent/stieltjes.hpp"

namespace zl::cli {
namespace {

class Tracker {
 public:
  Tracker(std::string name, int n_max, BigReal tolerance)
      : result_{std::move(name), n_max, BigReal(tolerance.precision()), std::move(tolerance), false} {}

  void observe(const BigReal& discrepancy) { result_.max_discrepancy = max(result_.max_discrepancy, discrepancy); }
  void observe_mismatch() { result_.max_discrepancy += BigReal(1L, result_.max_discrepancy.precision()); }

  CheckResult finish() {
    result_.passed = result_.max_discrepancy <= result_.tolerance;
    return std::move(result_);
  }

 private:
  CheckResult result_;
};

}  // namespace

std::vector<CheckResult> run_verify_suite(int n_max, Bits target_bits, std::optional<Bits> guard_bits) {
  if (n_max < 1) n_max = 1;
  const PrecisionContext ctx(target_bits, guard_bits.value_or(default_guard_bits(n_max)));
  const Bits w = ctx.working_bits();
  const BigReal tol = pow2(-(2 * target_bits) / 3, w);
  const BigReal exact(w);
  std::vector<CheckResult> out;

  const GammaTable gamma = compute_gamma_table(n_max, ctx);
  const EtaTable eta_rec = eta_from_gamma_recurrence(gamma, n_max, ctx);

  {
    const GammaTable again = compute_gamma_table(n_max, ctx.with_extra_guard(64));
    Tracker t("gamma_guard_stability", n_max, pow2(-target_bits, w));
    for (int n = 0; n <= n_max; ++n) t.observe(scaled_difference(gamma[n], again[n], again[n]));
    out.push_back(t.finish());
  }
  {
    const GammaTable back = convert_convention(convert_convention(gamma, Convention::classic), Convention::paper);
    Tracker t("convention_round_trip", n_max, exact);
    for (int n = 0; n <= n_max; ++n) t.observe(abs(back[n] - gamma[n]));
    out.push_back(t.finish());
  }
  {
    const EtaTable eta_exp = eta_table_explicit(gamma, n_max, ctx);
    Tracker t("eta_explicit_vs_recurrence", n_max, tol);
    for (int n = 0; n <= n_max; ++n) t.observe(scaled_difference(eta_exp[n], eta_rec[n], eta_rec[n]));
    out.push_back(t.finish());
  }
  {
    const EtaTable eta_ser = eta_series_oracle(gamma, n_max, ctx);
    Tracker t("eta_series_vs_recurrence", n_max, tol);
    for (int n = 0; n <= n_max; ++n) t.observe(scaled_difference(eta_ser[n], eta_rec[n], eta_rec[n]));
    out.push_back(t.finish());
  }
  {
    const GammaTable back = gamma_table_from_eta(eta_rec, n_max, ctx);
    Tracker t("gamma_round_trip", n_max, tol);
    for (int n = 0; n <= n_max; ++n) t.observe(scaled_difference(back[n], gamma[n], gamma[n]));
    out.push_back(t.finish());
  }
  {
    Tracker cross("lambda_binomial_vs_explicit", n_max, tol);
    Tracker sentinel("lambda_cancellation_sentinel", n_max, pow2(-target_bits, w));
    Tracker dist("distribution_sum_vs_lambda", n_max, tol);
    for (int n = 1; n <= n_max; ++n) {
      const PrecisionContext li_ctx(target_bits, guard_bits.value_or(li_guard_bits(n)));
      const EtaTable eta = eta_from_gamma_recurrence(gamma, n - 1, li_ctx);
      const auto un = static_cast<unsigned>(n);
      const BigReal binom = lambda_tilde_binomial(eta, un, li_ctx);
      const BigReal expl = lambda_tilde_explicit(gamma, un, li_ctx);
      cross.observe(scaled_difference(binom, expl, expl));
      const BigReal wider = lambda_tilde_binomial(eta, un, li_ctx.with_extra_guard(64));
      sentinel.observe(scaled_difference(binom, wider, wider));
      BigReal sum(li_ctx.working_bits());
      for (const auto& v : term_distribution(gamma, un, li_ctx).term_values) sum += v;
      dist.observe(scaled_difference(-sum, binom, binom));
    }
    out.push_back(cross.finish());
    out.push_back(sentinel.finish());
    out.push_back(dist.finish());
  }
  {
    const auto p = partition_counts(static_cast<unsigned>(n_max));
    Tracker eta_count("eta_term_count", n_max, exact);
    Tracker lambda_count("lambda_term_count", n_max, exact);
    Tracker sign("eta_sign_and_integrality", n_max, exact);
    BigInt running = 0;
    for (unsigned n = 1; n <= static_cast<unsigned>(n_max); ++n) {
      running += p[n];
      const SymbolicExpansion eta = expand_eta_symbolic(n);
      if (BigInt(static_cast<unsigned long>(eta.size())) != p[n]) eta_count.observe_mismatch();
      if (BigInt(static_cast<unsigned long>(expand_lambda_symbolic(n).size())) != running) {
        lambda_count.observe_mismatch();
      }
      for (const auto& term : eta.terms()) {
        const int expected = term.k.p() % 2 == 0 ? 1 : -1;
        if (!term.coeff.is_integer() || term.coeff.sign() != expected) sign.observe_mismatch();
      }
    }
    out.push_back(eta_count.finish());
    out.push_back(lambda_count.finish());
    out.push_back(sign.finish());
  }
  return out;
}

std::string format_check_line(const CheckResult& check) {
  return "check=" + check.name + " n_max=" + std::to_string(check.n_max) +
         " max_discrepancy=" + check.max_discrepancy.to_string(6) + " tolerance=" + check.tolerance.to_string(6) +
         " status=" + (check.passed ? "pass" : "fail");
}

}  // namespace zl::cli
