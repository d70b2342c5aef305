#pragma once

#include <span>
#include <vector>

#include "zetalaurent/numerics/big_real.hpp"
#include "zetalaurent/partitions.hpp"

namespace zl::detail {

// Memoized integer powers x_i^e at a fixed precision, for evaluating many
// monomials over the same variables.
class PowerCache {
 public:
  PowerCache(std::span<const BigReal> variables, Bits bits);

  const BigReal& power(std::size_t i, std::uint32_t e);
  // prod_i x_i^{k_i}; throws TableError if k references a missing variable.
  BigReal monomial(const MultiplicityVector& k);

 private:
  Bits bits_;
  std::vector<std::vector<BigReal>> powers_;  // powers_[i][e] = x_i^e
};

}  // namespace zl::detail
