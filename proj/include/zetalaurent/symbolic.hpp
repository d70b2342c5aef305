#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zetalaurent/numerics/big_rational.hpp"
#include "zetalaurent/numerics/big_real.hpp"
#include "zetalaurent/partitions.hpp"

namespace zl {

/// Which coefficient an expansion expresses:
///   eta          eta_{n-1} as a polynomial in gamma_0, gamma_1, ...
///   gamma        gamma_{n-1} as a polynomial in eta_0, eta_1, ...
///   lambda_tilde lambda~_n as a polynomial in gamma_0, gamma_1, ...
enum class SymbolicTarget { eta, gamma, lambda_tilde };

std::string to_string(SymbolicTarget t);
SymbolicTarget parse_symbolic_target(std::string_view text);

/// One monomial prod_i x_i^{k_i} with its exact coefficient.
struct SymbolicTerm {
  MultiplicityVector k;
  BigRational coeff;
};

/// Exact polynomial identity, terms kept in canonical partition order.
class SymbolicExpansion {
 public:
  SymbolicExpansion(SymbolicTarget target, unsigned n, std::vector<SymbolicTerm> terms);

  SymbolicTarget target() const { return target_; }
  unsigned n() const { return n_; }
  const std::vector<SymbolicTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of the monomial with multiplicities `k` (trailing zeros
  /// ignored), or zero when absent.
  BigRational coefficient(std::span<const std::uint32_t> k) const;

  /// Substitutes numeric values for the variables x_0, x_1, ...
  BigReal evaluate(std::span<const BigReal> variables, Bits bits) const;

  /// {"target": ..., "n": ..., "terms": [{"k": [...], "coeff": "num/den"}]}
  std::string to_json() const;
  /// Header "k,coeff"; k as ';'-separated multiplicities.
  std::string to_csv() const;
  static SymbolicExpansion from_json(std::string_view text);

 private:
  SymbolicTarget target_;
  unsigned n_;
  std::vector<SymbolicTerm> terms_;
};

}  // namespace zl
