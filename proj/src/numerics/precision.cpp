#include "zetalaurent/numerics/precision.hpp"

#include <cmath>
#include <string>

#include "zetalaurent/errors.hpp"

namespace zl {

PrecisionContext::PrecisionContext(Bits target_bits, Bits guard_bits)
    : target_(target_bits), guard_(guard_bits) {
  if (target_bits < 1) {
    throw DomainError("target precision must be at least 1 bit, got " + std::to_string(target_bits));
  }
  if (guard_bits < 0) {
    throw DomainError("guard bits must be nonnegative, got " + std::to_string(guard_bits));
  }
  if (working_bits() > kMaxWorkingBits) {
    throw DomainError("working precision too large: " + std::to_string(working_bits()));
  }
}

PrecisionContext PrecisionContext::with_auto_guard(Bits target_bits, int n_max) {
  return PrecisionContext(target_bits, default_guard_bits(n_max));
}

PrecisionContext PrecisionContext::with_extra_guard(Bits extra) const {
  return PrecisionContext(target_, guard_ + extra);
}

int decimal_digits_for_bits(Bits bits) {
  // ceil(bits * 0.302) in integer arithmetic.
  return static_cast<int>((bits * 302 + 999) / 1000);
}

}  // namespace zl
