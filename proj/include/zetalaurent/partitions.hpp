#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <span>
#include <vector>

#include "zetalaurent/numerics/big_rational.hpp"

namespace zl {

/// Multiplicity representation of an integer partition: part (i + 1) occurs
/// k[i] times. Carries the derived statistics
///   p = sum k_i          (number of parts)
///   r = sum (1 + i) k_i  (the integer being partitioned)
class MultiplicityVector {
 public:
  MultiplicityVector() = default;
  explicit MultiplicityVector(std::vector<std::uint32_t> k);

  std::span<const std::uint32_t> k() const { return k_; }
  std::uint32_t operator[](std::size_t i) const { return k_[i]; }
  std::size_t size() const { return k_.size(); }
  std::uint64_t p() const { return p_; }
  std::uint64_t r() const { return r_; }

  /// Same multiplicities padded with zeros (or trimmed of trailing zeros)
  /// to `length` entries. Throws DomainError if a nonzero entry would be cut.
  MultiplicityVector resized(std::size_t length) const;

  friend bool operator==(const MultiplicityVector& a, const MultiplicityVector& b) { return a.k_ == b.k_; }
  friend auto operator<=>(const MultiplicityVector& a, const MultiplicityVector& b) { return a.k_ <=> b.k_; }

 private:
  std::vector<std::uint32_t> k_;
  std::uint64_t p_ = 0;
  std::uint64_t r_ = 0;
};

/// Lazy range over every multiplicity vector (k_0, ..., k_n) with r = n,
/// in ascending lexicographic order of k. Each vector has n + 1 entries
/// (k_n is always zero for n >= 1). For n = 0 the single vector is (0).
class ConstrainedPartitions {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = MultiplicityVector;
    using difference_type = std::ptrdiff_t;
    using pointer = const MultiplicityVector*;
    using reference = const MultiplicityVector&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.done_; }

   private:
    friend class ConstrainedPartitions;
    explicit iterator(unsigned n);

    unsigned n_ = 0;
    std::vector<std::uint32_t> k_;
    MultiplicityVector current_;
    bool done_ = true;
  };

  explicit ConstrainedPartitions(unsigned n) : n_(n) {}
  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  unsigned n_;
};

/// All multiplicity vectors with r = n, each exactly once, lazily.
inline ConstrainedPartitions enumerate_constrained(unsigned n) { return ConstrainedPartitions(n); }

/// Partition function p(n) via Euler's pentagonal number recurrence.
BigInt partition_count(unsigned n);

/// p(0), ..., p(n_max).
std::vector<BigInt> partition_counts(unsigned n_max);

/// sum_{m=1}^{n} p(m). Throws DomainError for n = 0.
BigInt summatory_partition_count(unsigned n);

}  // namespace zl
