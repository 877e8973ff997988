#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalars.
 *
 * Every coefficient, center, radius and bound in the library is a Rational.
 * Geometric predicates are decided by exact comparison; conversion to double
 * exists only for rendering.
 *
 * Canonical form: gcd(|num|, den) = 1 and den > 0, so the sign lives in the
 * numerator and zero is 0/1.
 */

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fuchsian {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT: implicit from integers
  Rational(int value) : value_(static_cast<long>(value)) {}  // NOLINT
  explicit Rational(const Integer& value) : value_(value) {}

  /// Reduces n/d to canonical form. Throws std::domain_error if d == 0.
  static Rational canonicalize(const Integer& numerator, const Integer& denominator);
  static Rational canonicalize(long numerator, long denominator) {
    return canonicalize(Integer(numerator), Integer(denominator));
  }

  /// Accepts "p", "p/q" and plain decimals such as "-1.25".
  /// Throws std::invalid_argument on malformed text or a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;

  /// Lossy; for rendering only.
  double to_double() const { return value_.get_d(); }

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
    return cmp(lhs.value_, rhs.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    return cmp(lhs.value_, rhs.value_) <=> 0;
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

/// Total order consistent with the reals.
std::strong_ordering compare(const Rational& x, const Rational& y);

/// Exact square root when numerator and denominator are both perfect squares,
/// std::nullopt otherwise. Throws std::domain_error for negative input.
std::optional<Rational> sqrt_exact(const Rational& x);

/// base^exponent for a non-negative exponent.
Integer pow_integer(unsigned long base, unsigned long exponent);

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace fuchsian
