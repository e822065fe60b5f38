#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace simcut {

__extension__ typedef __int128 int128;

std::string to_string(int128 value);

/// Exact rational with 128-bit numerator and denominator, always reduced
/// and with a positive denominator.
class Fraction {
public:
  Fraction() = default;
  Fraction(int128 num, int128 den = 1);

  static Fraction from_int(std::int64_t v) { return Fraction(v); }

  int128 num() const { return num_; }
  int128 den() const { return den_; }

  double to_double() const;
  std::string str() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  friend Fraction operator/(const Fraction& a, const Fraction& b);
  Fraction operator-() const { return Fraction(-num_, den_); }
  Fraction& operator+=(const Fraction& o) { return *this = *this + o; }
  Fraction& operator-=(const Fraction& o) { return *this = *this - o; }
  Fraction& operator*=(const Fraction& o) { return *this = *this * o; }

  friend bool operator==(const Fraction& a, const Fraction& b) = default;
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

private:
  int128 num_ = 0;
  int128 den_ = 1;
};

} // namespace simcut
