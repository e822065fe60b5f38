#include "simcut/fraction.hpp"

#include "simcut/errors.hpp"

#include <algorithm>

namespace simcut {

namespace {

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace

std::string to_string(int128 value) {
  if (value == 0) {
    return "0";
  }
  bool negative = value < 0;
  // Work on the negative side so the minimum value does not overflow.
  int128 v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) {
    digits.push_back('-');
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Fraction::Fraction(int128 num, int128 den) {
  if (den == 0) {
    throw ContractError("fraction with zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  num_ = num;
  den_ = den;
}

double Fraction::to_double() const {
  // Exact for |num|, den < 2^53, which covers every value produced here.
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Fraction::str() const {
  if (den_ == 1) {
    return to_string(num_);
  }
  return to_string(num_) + "/" + to_string(den_);
}

Fraction operator+(const Fraction& a, const Fraction& b) {
  if (a.den_ == b.den_) {
    return Fraction(a.num_ + b.num_, a.den_);
  }
  int128 g = gcd128(a.den_, b.den_);
  return Fraction(a.num_ * (b.den_ / g) + b.num_ * (a.den_ / g), a.den_ / g * b.den_);
}

Fraction operator-(const Fraction& a, const Fraction& b) { return a + (-b); }

Fraction operator*(const Fraction& a, const Fraction& b) {
  int128 g1 = gcd128(a.num_, b.den_);
  int128 g2 = gcd128(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Fraction((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

Fraction operator/(const Fraction& a, const Fraction& b) {
  if (b.num_ == 0) {
    throw ContractError("fraction division by zero");
  }
  return a * Fraction(b.den_, b.num_);
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
  // Denominators are positive, so cross-multiplication preserves order.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

} // namespace simcut
