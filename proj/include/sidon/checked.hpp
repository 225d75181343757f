#pragma once

// Overflow-checked 64-bit integer arithmetic. Every operation either returns
// the exact result or throws Error{Overflow}; nothing wraps around.

#include <cstdint>
#include <vector>

#include "sidon/error.hpp"

namespace sidon {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

namespace checked {

[[noreturn]] void overflow(const char* op);

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) overflow("add");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) overflow("sub");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) overflow("mul");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

// a - q*b
inline Int sub_mul(Int a, Int q, Int b) { return sub(a, mul(q, b)); }

// Floor division and the matching nonnegative remainder (for b > 0).
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(Int a, Int b) {
  Int r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) r += b;
  return r;
}

Int gcd(Int a, Int b);

// Extended gcd: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
Int xgcd(Int a, Int b, Int& x, Int& y);

// Binomial coefficient C(n, k), exact or Overflow.
Int binomial(Int n, Int k);

Int factorial(Int n);

Int pow(Int base, Int exp);

}  // namespace checked
}  // namespace sidon
