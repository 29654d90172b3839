#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace sparse_ec {

/// Exact rational number with a positive denominator, always kept in lowest
/// terms. Threshold tests such as `delta >= 2 * mad` must not be subject to
/// rounding, so densities are carried in this form end to end.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  /// Smallest integer >= value.
  std::int64_t ceil() const;
  /// Largest integer <= value.
  std::int64_t floor() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// Always rendered as "p/q", including integers ("3/1").
  std::string str() const;
  /// Parses "p/q" or a bare integer.
  static Rational parse(const std::string& text);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace sparse_ec
