#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zetalaurent/numerics/big_real.hpp"
#include "zetalaurent/numerics/precision.hpp"

namespace zl::cli {

// One cross-method check: passes when max_discrepancy <= tolerance.
struct CheckResult {
  std::string name;
  int n_max = 0;
  BigReal max_discrepancy;
  BigReal tolerance;
  bool passed = false;
};

// Every cross-method invariant at target precision `target_bits` for
// indices up to n_max. Floating-point checks use the tolerance
// 2^-floor(2 target / 3), scaled by max(1, |reference|); exact
// (combinatorial) checks use tolerance zero.
std::vector<CheckResult> run_verify_suite(int n_max, Bits target_bits, std::optional<Bits> guard_bits);

// "check=<name> n_max=<N> max_discrepancy=<x> tolerance=<t> status=pass|fail"
std::string format_check_line(const CheckResult& check);

}  // namespace zl::cli
