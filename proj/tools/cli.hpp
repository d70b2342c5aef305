#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zetalaurent/numerics/precision.hpp"
#include "zetalaurent/stieltjes.hpp"

namespace zl::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad arguments, I/O, malformed input
inline constexpr int kExitPrecision = 2;  // precision infeasible
inline constexpr int kExitVerifyFailed = 3;  // `verify` found a failing check

// Flags shared by every subcommand. guard = nullopt means "auto".
struct RunConfig {
  Bits precision_target_bits = kDefaultTargetBits;
  std::optional<Bits> guard_bits;
  int n_max = 10;
  TableFormat output_format = TableFormat::csv;
  std::string table_path;
  std::string out_path;

  // Resolves "auto" with `policy_guard` before any computation starts.
  PrecisionContext context(Bits policy_guard) const;
};

// Runs one command line (without the program name). Output goes to `out`,
// diagnostics to `err`; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zl::cli
