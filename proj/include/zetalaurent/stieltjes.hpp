#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "zetalaurent/numerics/big_real.hpp"
#include "zetalaurent/numerics/precision.hpp"

namespace zl {

/// Normalization of the Stieltjes constants.
///
/// `paper`:   zeta(1 + s) = 1/s + sum_n gamma_n s^n
/// `classic`: zeta(s) = 1/(s - 1) + sum_n (-1)^n / n! gamma_n (s - 1)^n
///
/// so gamma_paper[n] = (-1)^n / n! * gamma_classic[n].
enum class Convention { paper, classic };

std::string to_string(Convention c);
/// Throws FormatError for anything but "paper" / "classic".
Convention parse_convention(std::string_view text);

/// Stieltjes constants gamma_0 .. gamma_{n_max} in one convention.
/// `precision_bits` is the precision the values are carried at.
class GammaTable {
 public:
  /// Throws TableError if values is empty; values are rounded to precision_bits.
  GammaTable(Convention convention, std::vector<BigReal> values, Bits precision_bits);

  Convention convention() const { return convention_; }
  int n_max() const { return static_cast<int>(values_.size()) - 1; }
  Bits precision_bits() const { return precision_bits_; }
  const std::vector<BigReal>& values() const { return values_; }
  const BigReal& operator[](std::size_t n) const { return values_[n]; }

  /// Throws TableError unless the table is in `convention` and reaches n_max.
  void require(Convention convention, int n_max) const;

 private:
  Convention convention_;
  std::vector<BigReal> values_;
  Bits precision_bits_;
};

/// Parameters of the Euler-Maclaurin expansion of zeta(1 + s).
struct EulerMaclaurinPlan {
  unsigned long terms = 0;   ///< M: the direct sum runs over k = 1 .. M - 1
  int corrections = 0;       ///< J: Bernoulli corrections B_2 .. B_{2J}
  double log2_truncation = 0;  ///< log2 of the per-coefficient truncation bound
  Bits rounding_loss_bits = 0;  ///< guard bits the plan needs to absorb rounding
};

/// Cheapest (M, J) whose truncation bound is below 2^-(target_bits + 8) for
/// every Taylor coefficient of order <= n_max.
///
/// The bound combines Backlund's remainder estimate on |s| = 1,
///   |R_J(1 + s)| <= (2J + 3) / (2J + 1) * |B_{2J+2}| * M^{-(2J+1)},
/// with Cauchy's coefficient inequality.
EulerMaclaurinPlan plan_euler_maclaurin(int n_max, Bits target_bits);

/// Stieltjes constants gamma_0 .. gamma_{n_max} in the paper convention.
///
/// zeta(1 + s) - 1/s is expanded as a power series in s:
///   sum_{k<M} k^{-1-s}  +  (M^{-s} - 1)/s  +  M^{-1-s}/2
///   + sum_{j=1}^{J} B_{2j}/(2j)! (1+s)(2+s)...(2j-1+s) M^{-2j-s}
/// Values are carried at ctx.working_bits(). Throws PrecisionInfeasibleError
/// when the guard bits cannot absorb the rounding of the chosen plan.
GammaTable compute_gamma_table(int n_max, const PrecisionContext& ctx);

/// Same as compute_gamma_table with an explicit plan (for self-consistency
/// checks that vary M or J).
GammaTable compute_gamma_table(int n_max, const PrecisionContext& ctx, const EulerMaclaurinPlan& plan);

/// Finite-x truncation of the limit definition of gamma_n (paper
/// convention). Converges like O(log(x)^n / x); sanity checks only.
BigReal gamma_limit_definition(int n, unsigned long x_max, const PrecisionContext& ctx);

/// Rescales every entry by (-1)^n / n! or its inverse. Paper -> classic is
/// exact (the result precision grows by the bit length of n!); classic ->
/// paper rounds to the table precision.
GammaTable convert_convention(const GammaTable& table, Convention target);

enum class TableFormat { json, csv };

/// JSON when the path ends in .json, CSV when it ends in .csv; otherwise
/// sniffed from content (load) or JSON (save).
TableFormat format_for_path(const std::filesystem::path& path);

std::string format_table(const GammaTable& table, TableFormat format);
/// Throws FormatError (malformed, unknown convention) or TableError (entry
/// count differs from n_max).
GammaTable parse_gamma_table(std::string_view text);

GammaTable load_table(const std::filesystem::path& path);
void save_table(const GammaTable& table, const std::filesystem::path& path);
void save_table(const GammaTable& table, const std::filesystem::path& path, TableFormat format);

}  // namespace zl
