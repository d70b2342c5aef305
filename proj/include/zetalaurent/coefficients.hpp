#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetalaurent/numerics/big_rational.hpp"
#include "zetalaurent/numerics/big_real.hpp"
#include "zetalaurent/numerics/precision.hpp"
#include "zetalaurent/partitions.hpp"
#include "zetalaurent/stieltjes.hpp"
#include "zetalaurent/symbolic.hpp"

namespace zl {

/// Route that produced an eta table.
enum class EtaProvenance { recurrence, explicit_formula, series_oracle, limit_definition };

std::string to_string(EtaProvenance p);
EtaProvenance parse_eta_provenance(std::string_view text);

/// Laurent coefficients eta_0 .. eta_{n_max} of -zeta'/zeta(1 + s) - 1/s.
class EtaTable {
 public:
  EtaTable(EtaProvenance provenance, std::vector<BigReal> values, Bits precision_bits);

  EtaProvenance provenance() const { return provenance_; }
  int n_max() const { return static_cast<int>(values_.size()) - 1; }
  Bits precision_bits() const { return precision_bits_; }
  const std::vector<BigReal>& values() const { return values_; }
  const BigReal& operator[](std::size_t n) const { return values_[n]; }

  /// Throws TableError when the table stops before n_max.
  void require(int n_max) const;

 private:
  EtaProvenance provenance_;
  std::vector<BigReal> values_;
  Bits precision_bits_;
};

std::string format_eta_table(const EtaTable& table, TableFormat format);
EtaTable parse_eta_table(std::string_view text);
EtaTable load_eta_table(const std::filesystem::path& path);
void save_eta_table(const EtaTable& table, const std::filesystem::path& path);

// Exact per-term coefficients of the partition sums. `k` is a multiplicity
// vector with p = sum k_i and r = sum (1+i) k_i.

/// Gamma(p) with the convention G(0) = 1, as an exact factorial (p-1)!.
BigInt modified_gamma(std::uint64_t p);

/// Coefficient of prod gamma_i^{k_i} in eta_{n-1}: (-1)^p n G(p) / prod k_i!.
/// An integer whenever r = n.
BigRational eta_term_coefficient(const MultiplicityVector& k, unsigned n);

/// Coefficient of prod eta_i^{k_i} in gamma_{r-1}:
/// prod (1/k_i!) (-1/(1+i))^{k_i}.
BigRational gamma_term_coefficient(const MultiplicityVector& k);

/// Coefficient of prod gamma_i^{k_i} in lambda~_n:
/// -(-1)^p G(p) C(n, r) r / prod k_i!.
BigRational lambda_term_coefficient(const MultiplicityVector& k, unsigned n);

/// eta_0 .. eta_{n_max} from Coffey's recurrence
///   eta_n = -(n+1) gamma_n - sum_{k=0}^{n-1} eta_k gamma_{n-k-1}.
/// Requires a paper-convention table reaching n_max.
EtaTable eta_from_gamma_recurrence(const GammaTable& g, int n_max, const PrecisionContext& ctx);

/// eta_{n-1} from the explicit partition sum
///   eta_{n-1} = n sum_{r(k) = n} G(p) prod (-gamma_i)^{k_i} / k_i!,
/// summed in canonical enumeration order. n >= 1.
BigReal eta_from_gamma_explicit(const GammaTable& g, unsigned n, const PrecisionContext& ctx);

/// eta_0 .. eta_{n_max}, each entry from eta_from_gamma_explicit.
EtaTable eta_table_explicit(const GammaTable& g, int n_max, const PrecisionContext& ctx);

/// gamma_{n-1} from the inverted partition sum
///   gamma_{n-1} = sum_{r(k) = n} prod (1/k_i!) (-eta_i / (1+i))^{k_i}.
/// n >= 1.
BigReal gamma_from_eta_explicit(const EtaTable& e, unsigned n, const PrecisionContext& ctx);

/// Paper-convention gamma_0 .. gamma_{n_max} from gamma_from_eta_explicit.
GammaTable gamma_table_from_eta(const EtaTable& e, int n_max, const PrecisionContext& ctx);

/// eta_0 .. eta_{n_max} as the coefficients of -A'(s)/A(s) with
/// A(s) = 1 + sum gamma_n s^{n+1}, using only power-series arithmetic.
EtaTable eta_series_oracle(const GammaTable& g, int n_max, const PrecisionContext& ctx);

/// Base p when k = p^m for a prime p and m >= 1; nullopt otherwise.
/// Integer roots are extracted for every m <= log2 k and the candidate base
/// is tested by trial division.
std::optional<unsigned long> prime_power_base(unsigned long k);

/// Lambda(k) = ln p if k is a power of the prime p, else 0. k >= 1.
BigReal von_mangoldt(unsigned long k, Bits bits);

/// Finite-x truncation of the limit definition of eta_n:
///   (-1)^n / n! ( sum_{k<=x} Lambda(k) (log k)^n / k - (log x)^{n+1} / (n+1) ).
/// Converges slowly; sanity checks only.
BigReal eta_limit_definition(int n, unsigned long x_max, const PrecisionContext& ctx);

/// eta_0 .. eta_{n_max} from eta_limit_definition.
EtaTable eta_table_limit(int n_max, unsigned long x_max, const PrecisionContext& ctx);

/// eta_{n-1} in terms of gamma_0 .. gamma_{n-1}; integer coefficients.
SymbolicExpansion expand_eta_symbolic(unsigned n);

/// gamma_{n-1} in terms of eta_0 .. eta_{n-1}; rational coefficients whose
/// product with n! is an integer.
SymbolicExpansion expand_gamma_symbolic(unsigned n);

}  // namespace zl
