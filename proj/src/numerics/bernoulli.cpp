#include "zetalaurent/numerics/bernoulli.hpp"

#include <string>

#include "zetalaurent/errors.hpp"

namespace zl {

std::vector<BigRational> bernoulli_table(int m_max) {
  if (m_max < 0) throw DomainError("Bernoulli index must be nonnegative, got " + std::to_string(m_max));
  std::vector<BigRational> b;
  b.reserve(static_cast<std::size_t>(m_max) + 1);
  b.emplace_back(1);
  for (int m = 1; m <= m_max; ++m) {
    if (m > 1 && m % 2 == 1) {
      b.emplace_back(0);
      continue;
    }
    // B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j
    BigRational acc;
    for (int j = 0; j < m; ++j) {
      if (b[static_cast<std::size_t>(j)].sign() == 0) continue;
      acc += BigRational(binomial(static_cast<unsigned long>(m + 1), static_cast<unsigned long>(j))) *
             b[static_cast<std::size_t>(j)];
    }
    b.push_back(-acc / BigRational(m + 1));
  }
  return b;
}

BigRational bernoulli(int m) { return bernoulli_table(m).back(); }

}  // namespace zl
