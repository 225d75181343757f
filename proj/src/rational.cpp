#include "sidon/rational.hpp"

#include <charconv>

namespace sidon {

using namespace checked;

Rational::Rational(Int num, Int den) {
  if (den == 0) throw Error(ErrorCode::InvalidArgument, "rational with zero denominator");
  if (den < 0) {
    num = neg(num);
    den = neg(den);
  }
  Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Int Rational::round_half_up() const {
  // floor(x + 1/2) = floor((2 num + den) / (2 den))
  return floor_div(add(mul(2, num_), den_), mul(2, den_));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

namespace {

Int parse_int(std::string_view text) {
  Int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || first == last)
    throw Error(ErrorCode::ParseError, "not an integer: '" + std::string(text) + "'");
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Rational operator+(const Rational& a, const Rational& b) {
  Int g = gcd(a.den_, b.den_);
  Int den = mul(a.den_ / g, b.den_);
  Int num = add(mul(a.num_, b.den_ / g), mul(b.num_, a.den_ / g));
  return Rational(num, den);
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
  Int g1 = gcd(a.num_, b.den_);
  Int g2 = gcd(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Rational(mul(a.num_ / g1, b.num_ / g2), mul(a.den_ / g2, b.den_ / g1));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw Error(ErrorCode::InvalidArgument, "division by zero rational");
  return a * Rational(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // denominators are positive, so cross multiplication preserves order
  return mul(a.num_, b.den_) <=> mul(b.num_, a.den_);
}

}  // namespace sidon
