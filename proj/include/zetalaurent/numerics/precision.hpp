#pragma once

#include <algorithm>
#include <cstdint>

namespace zl {

using Bits = std::int64_t;

/// Working-precision policy shared by every numeric operation.
///
/// Results are requested at `target_bits`; arithmetic is carried out at
/// `working_bits() = target_bits + guard_bits` with round-to-nearest.
/// Identical inputs under an identical context give bit-identical outputs.
class PrecisionContext {
 public:
  /// Throws DomainError unless target_bits >= 1 and guard_bits >= 0.
  PrecisionContext(Bits target_bits, Bits guard_bits);

  /// Context whose guard bits follow the general policy max(64, 2 * n_max).
  static PrecisionContext with_auto_guard(Bits target_bits, int n_max);

  Bits target_bits() const { return target_; }
  Bits guard_bits() const { return guard_; }
  Bits working_bits() const { return target_ + guard_; }

  /// Same target, `extra` more guard bits.
  PrecisionContext with_extra_guard(Bits extra) const;

  friend bool operator==(const PrecisionContext&, const PrecisionContext&) = default;

 private:
  Bits target_;
  Bits guard_;
};

/// Guard bits for the general coefficient computations.
inline Bits default_guard_bits(int n_max) { return std::max<Bits>(64, 2 * Bits{n_max}); }

/// Guard bits for the binomial Li sums, which lose O(n) bits to cancellation.
inline Bits li_guard_bits(int n) { return std::max<Bits>(64, 10 * Bits{n}); }

/// Decimal digits emitted when serializing a value carried at `bits`.
int decimal_digits_for_bits(Bits bits);

inline constexpr Bits kDefaultTargetBits = 192;
inline constexpr Bits kDefaultWorkingBits = 256;
inline constexpr Bits kMaxWorkingBits = Bits{1} << 24;

}  // namespace zl
