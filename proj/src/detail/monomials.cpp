#include "detail/monomials.hpp"

#include <string>

#include "zetalaurent/errors.hpp"

namespace zl::detail {

PowerCache::PowerCache(std::span<const BigReal> variables, Bits bits) : bits_(bits) {
  powers_.reserve(variables.size());
  for (const auto& x : variables) {
    powers_.push_back({BigReal(1L, bits), BigReal(x, bits)});
  }
}

const BigReal& PowerCache::power(std::size_t i, std::uint32_t e) {
  if (i >= powers_.size()) throw TableError("missing value for index " + std::to_string(i));
  auto& row = powers_[i];
  while (row.size() <= e) row.push_back(row.back() * row[1]);
  return row[e];
}

BigReal PowerCache::monomial(const MultiplicityVector& k) {
  BigReal out(1L, bits_);
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] != 0) out *= power(i, k[i]);
  }
  return out;
}

}  // namespace zl::detail
