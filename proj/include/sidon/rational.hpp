#pragma once

#include <compare>
#include <string>
#include <string_view>

#include "sidon/checked.hpp"

namespace sidon {

/// Exact rational in canonical form: gcd(num, den) = 1 and den > 0.
class Rational {
 public:
  Rational() = default;
  Rational(Int value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }

  Int floor() const { return checked::floor_div(num_, den_); }
  Int ceil() const { return checked::neg(checked::floor_div(checked::neg(num_), den_)); }
  // Nearest integer, ties rounded toward +infinity.
  Int round_half_up() const;

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;
  static Rational parse(std::string_view text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(checked::neg(num_), den_); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  Int num_ = 0;
  Int den_ = 1;
};

}  // namespace sidon
