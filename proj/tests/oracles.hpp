#pragma once

// Independent reference implementations used only by the tests. None of
// these share code paths with the library beyond the BigReal wrapper.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zetalaurent/numerics/big_real.hpp"

namespace oracle {

using Exponents = std::vector<std::uint32_t>;

// Sparse multivariate polynomial with rational coefficients.
class Poly {
 public:
  explicit Poly(std::size_t vars = 0) : vars_(vars) {}
  static Poly variable(std::size_t vars, std::size_t i);
  static Poly constant(std::size_t vars, const mpq_class& c);

  std::size_t vars() const { return vars_; }
  const std::map<Exponents, mpq_class>& terms() const { return terms_; }
  mpq_class coefficient(const Exponents& e) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly operator*(const Poly& rhs) const;
  Poly scaled(const mpq_class& c) const;
  // Substitute each variable j by polys[j].
  Poly compose(const std::vector<Poly>& polys) const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  void add_term(const Exponents& e, const mpq_class& c);
  std::size_t vars_;
  std::map<Exponents, mpq_class> terms_;
};

// Builds a polynomial from (coefficient, exponent vector) pairs.
Poly make_poly(std::size_t vars, const std::vector<std::pair<long, Exponents>>& terms, long denominator = 1);

// eta_0..eta_{n_max} as polynomials in gamma_0..gamma_{n_max}, read off
// -A'(s)/A(s) with A(s) = 1 + sum gamma_n s^{n+1}.
std::vector<Poly> eta_polys(std::size_t n_max);
// gamma_0..gamma_{n_max} as polynomials in eta_0..eta_{n_max}, by solving
// the eta relations one index at a time.
std::vector<Poly> gamma_polys(std::size_t n_max);
// lambda~_1..lambda~_{n_max} (index 0 unused) as polynomials in gamma.
std::vector<Poly> lambda_polys(std::size_t n_max);

// All vectors (k_0..k_{n}) with sum (1+i) k_i = n, by scanning the box
// k_i <= n / (1+i), in ascending lexicographic order.
std::vector<Exponents> box_scan_partitions(unsigned n);
// p(n) by the coin-change recurrence.
mpz_class dp_partition_count(unsigned n);
// B_m by the Akiyama-Tanigawa algorithm (B_1 = +1/2 in that convention).
mpq_class akiyama_tanigawa(unsigned m);

// zeta(1+s) - 1/s straight from MPFR.
zl::BigReal zeta_regular_part(const zl::BigReal& s, zl::Bits bits);
// -zeta'(1+s)/zeta(1+s) - 1/s, with zeta' from a Richardson-extrapolated
// central difference of MPFR's zeta.
zl::BigReal neg_log_derivative_regular_part(const zl::BigReal& s, zl::Bits bits);

// Euler's constant from MPFR.
zl::BigReal euler_gamma(zl::Bits bits);

}  // namespace oracle
