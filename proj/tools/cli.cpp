#include "cli.hpp"

#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "detail/table_io.hpp"
#include "verify.hpp"
#include "zetalaurent/coefficients.hpp"
#include "zetalaurent/errors.hpp"
#include "zetalaurent/li.hpp"
#include "zetalaurent/stieltjes.hpp"

namespace zl::cli {
namespace {

using ordered_json = nlohmann::ordered_json;

PrecisionContext RunConfig_context(const RunConfig& cfg, Bits policy_guard) {
  return PrecisionContext(cfg.precision_target_bits, cfg.guard_bits.value_or(policy_guard));
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  out << text;
  if (!cfg.out_path.empty()) detail::write_file(cfg.out_path, text);
}

GammaTable gamma_source(const RunConfig& cfg, int n_needed, const PrecisionContext& ctx) {
  if (cfg.table_path.empty()) return compute_gamma_table(n_needed, ctx);
  GammaTable table = convert_convention(load_table(cfg.table_path), Convention::paper);
  table.require(Convention::paper, n_needed);
  return table;
}

// Printed values keep only the digits the target vouches for: resolution
// 2^-target relative to max(1, |value|).
std::string show(const BigReal& v, Bits target) { return round_to_target(v, target).to_string(); }

GammaTable rounded(const GammaTable& t, Bits target, int n_max) {
  std::vector<BigReal> values;
  for (int n = 0; n <= n_max; ++n) values.push_back(round_to_target(t[static_cast<std::size_t>(n)], target));
  return GammaTable(t.convention(), std::move(values), target);
}

EtaTable rounded(const EtaTable& t, Bits target) {
  std::vector<BigReal> values;
  for (const auto& v : t.values()) values.push_back(round_to_target(v, target));
  return EtaTable(t.provenance(), std::move(values), target);
}

void add_common(CLI::App* cmd, RunConfig& cfg, std::string& guard_text, std::string& format_text) {
  cmd->add_option("--n-max", cfg.n_max, "Highest index computed")->check(CLI::NonNegativeNumber)->capture_default_str();
  cmd->add_option("--prec", cfg.precision_target_bits, "Target precision in bits")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--guard", guard_text, "Guard bits: 'auto' or a nonnegative integer")
      ->check([](const std::string& s) -> std::string {
        if (s == "auto") return {};
        try {
          std::size_t used = 0;
          const long long v = std::stoll(s, &used);
          if (used == s.size() && v >= 0) return {};
        } catch (const std::exception&) {
        }
        return "expected 'auto' or a nonnegative integer, got '" + s + "'";
      })
      ->capture_default_str();
  cmd->add_option("--format", format_text, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--table", cfg.table_path, "Read Stieltjes constants from a JSON or CSV table instead of computing them");
  cmd->add_option("--out", cfg.out_path, "Also write the output to this file");
}

void finalize(RunConfig& cfg, const std::string& guard_text, const std::string& format_text) {
  cfg.guard_bits = guard_text == "auto" ? std::nullopt : std::optional<Bits>(std::stoll(guard_text));
  cfg.output_format = format_text == "json" ? TableFormat::json : TableFormat::csv;
}

int cmd_stieltjes(const RunConfig& cfg, const std::string& convention, std::ostream& out) {
  const PrecisionContext ctx = RunConfig_context(cfg, default_guard_bits(cfg.n_max));
  const GammaTable g = gamma_source(cfg, cfg.n_max, ctx);
  const GammaTable converted = convert_convention(g, parse_convention(convention));
  const GammaTable shown = rounded(converted, cfg.precision_target_bits, cfg.n_max);
  emit(cfg, format_table(shown, cfg.output_format), out);
  return kExitOk;
}

int cmd_eta(const RunConfig& cfg, const std::string& method, unsigned long x_max, std::ostream& out) {
  const PrecisionContext ctx = RunConfig_context(cfg, default_guard_bits(cfg.n_max));
  EtaTable eta = [&] {
    if (method == "limit") {
      if (x_max < 2) throw DomainError("--method limit requires --x-max >= 2");
      return eta_table_limit(cfg.n_max, x_max, ctx);
    }
    const GammaTable g = gamma_source(cfg, cfg.n_max, ctx);
    if (method == "recurrence") return eta_from_gamma_recurrence(g, cfg.n_max, ctx);
    if (method == "explicit") return eta_table_explicit(g, cfg.n_max, ctx);
    return eta_series_oracle(g, cfg.n_max, ctx);
  }();
  emit(cfg, format_eta_table(rounded(eta, cfg.precision_target_bits), cfg.output_format), out);
  return kExitOk;
}

int cmd_gamma_invert(const RunConfig& cfg, const std::string& eta_path, std::ostream& out) {
  const PrecisionContext ctx = RunConfig_context(cfg, default_guard_bits(cfg.n_max));
  const EtaTable eta = eta_path.empty() ? eta_from_gamma_recurrence(gamma_source(cfg, cfg.n_max, ctx), cfg.n_max, ctx)
                                        : load_eta_table(eta_path);
  const GammaTable g = gamma_table_from_eta(eta, cfg.n_max, ctx);
  emit(cfg, format_table(rounded(g, cfg.precision_target_bits, cfg.n_max), cfg.output_format), out);
  return kExitOk;
}

int cmd_li(const RunConfig& cfg, unsigned single_n, const std::string& method_text, bool with_trend, std::ostream& out) {
  const unsigned first = single_n > 0 ? single_n : 1;
  const unsigned last = single_n > 0 ? single_n : static_cast<unsigned>(cfg.n_max);
  if (last < 1) throw DomainError("li needs --n >= 1 or --n-max >= 1");
  const LambdaMethod method = parse_lambda_method(method_text);
  const PrecisionContext ctx = RunConfig_context(cfg, li_guard_bits(static_cast<int>(last)));
  const GammaTable g = gamma_source(cfg, static_cast<int>(last) - 1, ctx);
  const Bits target = cfg.precision_target_bits;

  std::optional<EtaTable> eta;
  if (method == LambdaMethod::binomial) eta = eta_from_gamma_recurrence(g, static_cast<int>(last) - 1, ctx);

  std::ostringstream csv;
  ordered_json rows = ordered_json::array();
  csv << "# method=" << to_string(method) << "\n# precision_bits=" << target << "\n";
  csv << (with_trend ? "n,lambda_tilde,trend,estimate\n" : "n,lambda_tilde\n");
  for (unsigned n = first; n <= last; ++n) {
    const BigReal lt = method == LambdaMethod::binomial ? lambda_tilde_binomial(*eta, n, ctx)
                                                        : lambda_tilde_explicit(g, n, ctx);
    ordered_json row;
    row["n"] = n;
    row["lambda_tilde"] = show(lt, target);
    csv << n << "," << row["lambda_tilde"].get<std::string>();
    if (with_trend) {
      const BigReal trend = lambda_trend(n, ctx);
      const BigReal estimate = trend + lt;
      row["trend"] = show(trend, target);
      row["estimate"] = show(estimate, target);
      csv << "," << row["trend"].get<std::string>() << "," << row["estimate"].get<std::string>();
    }
    csv << "\n";
    rows.push_back(std::move(row));
  }
  if (cfg.output_format == TableFormat::csv) {
    emit(cfg, csv.str(), out);
  } else {
    ordered_json doc;
    doc["method"] = to_string(method);
    doc["precision_bits"] = target;
    doc["estimate_is_asymptotic"] = with_trend;
    doc["rows"] = std::move(rows);
    emit(cfg, doc.dump(2) + "\n", out);
  }
  return kExitOk;
}

int cmd_histogram(const RunConfig& cfg, unsigned n, unsigned bins, bool raw, std::ostream& out) {
  if (n < 1) throw DomainError("histogram needs --n >= 1");
  const PrecisionContext ctx = RunConfig_context(cfg, li_guard_bits(static_cast<int>(n)));
  const GammaTable g = gamma_source(cfg, static_cast<int>(n) - 1, ctx);
  const TermDistribution d = term_distribution(g, n, ctx);
  const auto show_value = [&](const BigReal& v) { return show(v, cfg.precision_target_bits); };

  if (raw) {
    if (cfg.output_format == TableFormat::csv) {
      std::string text = "term_index,value\n";
      for (std::size_t i = 0; i < d.term_values.size(); ++i) {
        text += std::to_string(i) + "," + show_value(d.term_values[i]) + "\n";
      }
      emit(cfg, text, out);
    } else {
      ordered_json doc;
      doc["n"] = n;
      doc["count"] = d.term_values.size();
      ordered_json values = ordered_json::array();
      for (const auto& v : d.term_values) values.push_back(show_value(v));
      doc["values"] = std::move(values);
      emit(cfg, doc.dump(2) + "\n", out);
    }
    return kExitOk;
  }

  const auto hist = histogram(d, bins);
  if (cfg.output_format == TableFormat::csv) {
    std::string text = "bin_lower,bin_upper,count\n";
    for (const auto& b : hist) {
      text += show_value(b.lower) + "," + show_value(b.upper) + "," + std::to_string(b.count) + "\n";
    }
    emit(cfg, text, out);
  } else {
    ordered_json doc;
    doc["n"] = n;
    doc["count"] = d.term_values.size();
    ordered_json rows = ordered_json::array();
    for (const auto& b : hist) {
      ordered_json row;
      row["bin_lower"] = show_value(b.lower);
      row["bin_upper"] = show_value(b.upper);
      row["count"] = b.count;
      rows.push_back(std::move(row));
    }
    doc["bins"] = std::move(rows);
    emit(cfg, doc.dump(2) + "\n", out);
  }
  return kExitOk;
}

int cmd_expand(const RunConfig& cfg, const std::string& target, unsigned n, std::ostream& out) {
  if (n < 1) throw DomainError("expand needs --n >= 1");
  const SymbolicTarget t = parse_symbolic_target(target);
  const SymbolicExpansion e = t == SymbolicTarget::eta     ? expand_eta_symbolic(n)
                              : t == SymbolicTarget::gamma ? expand_gamma_symbolic(n)
                                                           : expand_lambda_symbolic(n);
  emit(cfg, cfg.output_format == TableFormat::json ? e.to_json() : e.to_csv(), out);
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  const auto checks = run_verify_suite(cfg.n_max, cfg.precision_target_bits, cfg.guard_bits);
  bool all_passed = true;
  std::string text;
  if (cfg.output_format == TableFormat::csv) {
    for (const auto& c : checks) {
      text += format_check_line(c) + "\n";
      all_passed = all_passed && c.passed;
    }
  } else {
    ordered_json rows = ordered_json::array();
    for (const auto& c : checks) {
      ordered_json row;
      row["check"] = c.name;
      row["n_max"] = c.n_max;
      row["max_discrepancy"] = c.max_discrepancy.to_string(6);
      row["tolerance"] = c.tolerance.to_string(6);
      row["status"] = c.passed ? "pass" : "fail";
      rows.push_back(std::move(row));
      all_passed = all_passed && c.passed;
    }
    ordered_json doc;
    doc["precision_bits"] = cfg.precision_target_bits;
    doc["n_max"] = cfg.n_max;
    doc["passed"] = all_passed;
    doc["checks"] = std::move(rows);
    text = doc.dump(2) + "\n";
  }
  emit(cfg, text, out);
  return all_passed ? kExitOk : kExitVerifyFailed;
}

}  // namespace

PrecisionContext RunConfig::context(Bits policy_guard) const { return RunConfig_context(*this, policy_guard); }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stieltjes constants, Laurent coefficients of -zeta'/zeta, and the oscillating part of Li's numbers",
               "zetalaurent"};
  app.require_subcommand(1);

  struct Command {
    RunConfig cfg;
    std::string guard = "auto";
    std::string format = "csv";
  };
  Command st, eta, inv, li, hist, exp, ver;
  ver.cfg.n_max = 20;

  std::string convention = "paper";
  auto* c_st = app.add_subcommand("stieltjes", "Stieltjes constants by Euler-Maclaurin summation");
  add_common(c_st, st.cfg, st.guard, st.format);
  c_st->add_option("--convention", convention, "Output convention")
      ->check(CLI::IsMember({"paper", "classic"}))
      ->capture_default_str();

  std::string eta_method = "recurrence";
  unsigned long x_max = 0;
  auto* c_eta = app.add_subcommand("eta", "Laurent coefficients of -zeta'/zeta about s = 1");
  add_common(c_eta, eta.cfg, eta.guard, eta.format);
  c_eta->add_option("--method", eta_method,
                    "recurrence | explicit | series | limit (limit is a slow sanity check only)")
      ->check(CLI::IsMember({"recurrence", "explicit", "series", "limit"}))
      ->capture_default_str();
  c_eta->add_option("--x-max", x_max, "Cutoff for --method limit");

  std::string eta_path;
  auto* c_inv = app.add_subcommand("gamma-invert", "Stieltjes constants recovered from eta by the inverted formula");
  add_common(c_inv, inv.cfg, inv.guard, inv.format);
  c_inv->add_option("--eta-table", eta_path, "Eta table (JSON or CSV); default: recurrence from the gamma source");

  unsigned li_n = 0;
  std::string li_method = "explicit";
  bool with_trend = false;
  auto* c_li = app.add_subcommand("li", "Oscillating part of Li's numbers");
  add_common(c_li, li.cfg, li.guard, li.format);
  c_li->add_option("--n", li_n, "Single index (default: 1 .. n-max)")->check(CLI::PositiveNumber);
  c_li->add_option("--method", li_method, "binomial | explicit")
      ->check(CLI::IsMember({"binomial", "explicit"}))
      ->capture_default_str();
  c_li->add_flag("--with-trend", with_trend, "Add the asymptotic trend and trend + oscillation (asymptotic estimate)");

  unsigned hist_n = 10;
  unsigned bins = 40;
  bool raw = false;
  auto* c_hist = app.add_subcommand("histogram", "Distribution of the individual terms of lambda~_n");
  add_common(c_hist, hist.cfg, hist.guard, hist.format);
  c_hist->add_option("--n", hist_n, "Index n")->check(CLI::PositiveNumber)->capture_default_str();
  c_hist->add_option("--bins", bins, "Number of equal-width bins")->check(CLI::PositiveNumber)->capture_default_str();
  c_hist->add_flag("--raw", raw, "Emit raw term values instead of bins");

  std::string target = "eta";
  unsigned expand_n = 1;
  auto* c_exp = app.add_subcommand("expand", "Exact symbolic expansion of eta, gamma or lambda~");
  add_common(c_exp, exp.cfg, exp.guard, exp.format);
  c_exp->add_option("--target", target, "eta | gamma | lambda")
      ->check(CLI::IsMember({"eta", "gamma", "lambda"}))
      ->capture_default_str();
  c_exp->add_option("--n", expand_n, "Index n")->check(CLI::PositiveNumber)->capture_default_str();

  auto* c_ver = app.add_subcommand("verify", "Run every cross-method check and print one line per check");
  add_common(c_ver, ver.cfg, ver.guard, ver.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_st) {
      finalize(st.cfg, st.guard, st.format);
      return cmd_stieltjes(st.cfg, convention, out);
    }
    if (*c_eta) {
      finalize(eta.cfg, eta.guard, eta.format);
      return cmd_eta(eta.cfg, eta_method, x_max, out);
    }
    if (*c_inv) {
      finalize(inv.cfg, inv.guard, inv.format);
      return cmd_gamma_invert(inv.cfg, eta_path, out);
    }
    if (*c_li) {
      finalize(li.cfg, li.guard, li.format);
      return cmd_li(li.cfg, li_n, li_method, with_trend, out);
    }
    if (*c_hist) {
      finalize(hist.cfg, hist.guard, hist.format);
      return cmd_histogram(hist.cfg, hist_n, bins, raw, out);
    }
    if (*c_exp) {
      finalize(exp.cfg, exp.guard, exp.format);
      return cmd_expand(exp.cfg, target, expand_n, out);
    }
    finalize(ver.cfg, ver.guard, ver.format);
    return cmd_verify(ver.cfg, out);
  } catch (const PrecisionInfeasibleError& e) {
    err << "precision infeasible: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace zl::cli
