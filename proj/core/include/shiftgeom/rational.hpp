#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace shiftgeom {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact fraction with 64-bit numerator and denominator.
///
/// Always stored in lowest terms with a positive denominator. Arithmetic
/// uses 128-bit intermediates and throws std::overflow_error if a reduced
/// result does not fit.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  std::int64_t floor() const;
  std::int64_t ceil() const;
  /// floor(*this * k) without forming the product as a Rational.
  std::int64_t floor_mul(std::int64_t k) const;
  double to_double() const;

  /// "p/q", or "p" when the value is an integer.
  std::string str() const;
  /// Accepts "p", "p/q" and finite decimals such as "0.25".
  static Rational parse(std::string_view text);

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational& r);
BigRational to_big(const Rational& r);
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Twelve significant digits, trailing zeros kept ("0.500000000000").
std::string decimal_string(double value);

}  // namespace shiftgeom
