#pragma once

// Exact integer and rational scalars used throughout the library.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace psf {

/// Arbitrary-precision signed integer.
using Integer = mpz_class;

/// Parses a base-10 integer with optional leading sign. Throws
/// std::invalid_argument on malformed input.
Integer parse_integer(std::string_view text);

std::string to_string(const Integer& value);

/// Nonnegative greatest common divisor; gcd(0, 0) == 0.
Integer gcd(const Integer& a, const Integer& b);

/// C(n, k), with C(n, k) == 0 for k > n.
Integer binomial(std::uint64_t n, std::uint64_t k);

/// Exact fraction kept in lowest terms with a positive denominator.
///
/// Every constructor normalizes, so two equal values always share the same
/// (num, den) pair and a non-reduced state cannot be observed.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  /// Throws std::domain_error when den == 0.
  Rational(const Integer& num, const Integer& den);

  /// Accepts "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Numerator when is_integer(); throws std::domain_error otherwise.
  Integer to_integer() const;

  Rational abs() const;
  Rational pow(unsigned exponent) const;

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace psf
