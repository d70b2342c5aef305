#pragma once

#include <vector>

#include "zetalaurent/numerics/big_rational.hpp"

namespace zl {

// Exact Bernoulli number B_m with B_1 = -1/2. Odd m > 1 gives exact zero.
// Throws DomainError for negative m.
BigRational bernoulli(int m);

// B_0 .. B_{m_max}, computed once from the recurrence
// sum_{j=0}^{m} C(m+1, j) B_j = 0.
std::vector<BigRational> bernoulli_table(int m_max);

}  // namespace zl
