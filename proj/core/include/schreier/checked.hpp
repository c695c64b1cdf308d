#pragma once

#include <cstdint>
#include <stdexcept>

namespace schreier {

// All counts, vertex totals and sequence values share this type. Arithmetic on
// them goes through the checked helpers below; nothing is ever silently wrapped.
using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) {
    throw std::overflow_error("schreier: integer overflow in addition");
  }
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r = 0;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw std::overflow_error("schreier: integer overflow in subtraction");
  }
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw std::overflow_error("schreier: integer overflow in multiplication");
  }
  return r;
}

// Floor division for a nonnegative divisor; rounds toward negative infinity.
inline Count floor_div(Count a, Count b) {
  if (b <= 0) throw std::domain_error("schreier: floor_div requires a positive divisor");
  Count quot = a / b;
  if ((a % b != 0) && (a < 0)) --quot;
  return quot;
}

}  // namespace schreier
