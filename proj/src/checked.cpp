#include "sidon/checked.hpp"

#include <string>

namespace sidon {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidGroup: return "InvalidGroup";
    case ErrorCode::GroupMismatch: return "GroupMismatch";
    case ErrorCode::ElementNotInGroup: return "ElementNotInGroup";
    case ErrorCode::CardinalityOverflow: return "CardinalityOverflow";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::NotABhSet: return "NotABhSet";
    case ErrorCode::NotAPacking: return "NotAPacking";
    case ErrorCode::NotAnHBasis: return "NotAnHBasis";
    case ErrorCode::NotACovering: return "NotACovering";
    case ErrorCode::DegenerateRounding: return "DegenerateRounding";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UnsupportedParameters: return "UnsupportedParameters";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ConstructionInvalid: return "ConstructionInvalid";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::CatalogMismatch: return "CatalogMismatch";
  }
  return "Unknown";
}

namespace checked {

void overflow(const char* op) {
  throw Error(ErrorCode::Overflow, std::string("64-bit integer overflow in ") + op);
}

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int xgcd(Int a, Int b, Int& x, Int& y) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = sub_mul(old_r, q, r);
    old_r = r;
    r = tmp;
    tmp = sub_mul(old_s, q, s);
    old_s = s;
    s = tmp;
    tmp = sub_mul(old_t, q, t);
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = neg(old_r);
    old_s = neg(old_s);
    old_t = neg(old_t);
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Int binomial(Int n, Int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int result = 1;
  for (Int i = 1; i <= k; ++i) {
    // result * (n - k + i) is divisible by i after dividing out the gcd
    Int num = n - k + i;
    Int g = gcd(result, i);
    Int r = result / g;
    Int den = i / g;
    result = mul(r, num / den);
  }
  return result;
}

Int factorial(Int n) {
  Int result = 1;
  for (Int i = 2; i <= n; ++i) result = mul(result, i);
  return result;
}

Int pow(Int base, Int exp) {
  Int result = 1;
  for (Int i = 0; i < exp; ++i) result = mul(result, base);
  return result;
}

}  // namespace checked
}  // namespace sidon
