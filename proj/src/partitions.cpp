#include "zetalaurent/partitions.hpp"

#include <string>

#include "zetalaurent/errors.hpp"

namespace zl {

MultiplicityVector::MultiplicityVector(std::vector<std::uint32_t> k) : k_(std::move(k)) {
  for (std::size_t i = 0; i < k_.size(); ++i) {
    p_ += k_[i];
    r_ += static_cast<std::uint64_t>(i + 1) * k_[i];
  }
}

MultiplicityVector MultiplicityVector::resized(std::size_t length) const {
  for (std::size_t i = length; i < k_.size(); ++i) {
    if (k_[i] != 0) throw DomainError("cannot trim a nonzero multiplicity at index " + std::to_string(i));
  }
  std::vector<std::uint32_t> k(k_.begin(), k_.begin() + static_cast<std::ptrdiff_t>(std::min(length, k_.size())));
  k.resize(length, 0);
  return MultiplicityVector(std::move(k));
}

ConstrainedPartitions::iterator::iterator(unsigned n) : n_(n), k_(n + 1, 0), done_(false) {
  // Lexicographically smallest vector: a single part of size n.
  if (n > 0) k_[n - 1] = 1;
  current_ = MultiplicityVector(k_);
}

ConstrainedPartitions::iterator& ConstrainedPartitions::iterator::operator++() {
  if (done_) return *this;
  // prefix[i] = sum_{j<i} (1+j) k_j
  std::vector<std::uint64_t> prefix(k_.size() + 1, 0);
  for (std::size_t j = 0; j < k_.size(); ++j) prefix[j + 1] = prefix[j] + (j + 1) * std::uint64_t{k_[j]};

  // Successor: bump the rightmost position that still admits a completion
  // by strictly larger parts, then fill the suffix minimally.
  for (std::size_t i = n_; i-- > 0;) {
    const std::uint64_t part = i + 1;
    const std::uint64_t used = prefix[i] + part * k_[i];
    for (std::uint64_t d = 1; used + d * part <= n_; ++d) {
      const std::uint64_t rest = n_ - used - d * part;
      if (rest != 0 && rest < part + 1) continue;
      k_[i] += static_cast<std::uint32_t>(d);
      for (std::size_t j = i + 1; j < k_.size(); ++j) k_[j] = 0;
      if (rest > 0) k_[rest - 1] = 1;
      current_ = MultiplicityVector(k_);
      return *this;
    }
  }
  done_ = true;
  return *this;
}

std::vector<BigInt> partition_counts(unsigned n_max) {
  std::vector<BigInt> p(n_max + 1);
  p[0] = 1;
  for (unsigned m = 1; m <= n_max; ++m) {
    BigInt acc = 0;
    // Generalized pentagonal numbers g = j(3j -+ 1)/2 with sign (-1)^{j+1}.
    for (unsigned j = 1;; ++j) {
      const unsigned long g1 = static_cast<unsigned long>(j) * (3 * j - 1) / 2;
      if (g1 > m) break;
      const bool plus = (j % 2) == 1;
      if (plus) acc += p[m - g1]; else acc -= p[m - g1];
      const unsigned long g2 = static_cast<unsigned long>(j) * (3 * j + 1) / 2;
      if (g2 <= m) {
        if (plus) acc += p[m - g2]; else acc -= p[m - g2];
      }
    }
    p[m] = acc;
  }
  return p;
}

BigInt partition_count(unsigned n) { return partition_counts(n).back(); }

BigInt summatory_partition_count(unsigned n) {
  if (n == 0) throw DomainError("summatory partition count needs n >= 1");
  const auto p = partition_counts(n);
  BigInt acc = 0;
  for (unsigned m = 1; m <= n; ++m) acc += p[m];
  return acc;
}

}  // namespace zl
