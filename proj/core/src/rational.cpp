#include "fuchsian/rational.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace fuchsian {

namespace {

bool is_digit_run(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

Integer parse_signed_integer(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
    digits.remove_prefix(1);
  }
  if (!is_digit_run(digits)) {
    throw std::invalid_argument("malformed integer: '" + std::string(text) + "'");
  }
  Integer value(std::string(digits), 10);
  return text.front() == '-' ? Integer(-value) : value;
}

}  // namespace

Rational Rational::canonicalize(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  Rational result;
  result.value_ = mpq_class(numerator, denominator);
  result.value_.canonicalize();
  return result;
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_signed_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digit_run(den_text)) {
      throw std::invalid_argument("malformed denominator in '" + std::string(text) + "'");
    }
    Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return canonicalize(num, den);
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (!is_digit_run(frac) || (!whole.empty() && !is_digit_run(whole))) {
      throw std::invalid_argument("malformed decimal: '" + std::string(text) + "'");
    }
    Integer digits(std::string(whole) + std::string(frac), 10);
    Integer scale = pow_integer(10, frac.size());
    Rational value = canonicalize(digits, scale);
    return negative ? -value : value;
  }

  return Rational(parse_signed_integer(text));
}

Rational Rational::abs() const {
  Rational result;
  result.value_ = ::abs(value_);
  return result;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const {
  Rational result;
  result.value_ = -value_;
  return result;
}

std::strong_ordering compare(const Rational& x, const Rational& y) { return x <=> y; }

std::optional<Rational> sqrt_exact(const Rational& x) {
  if (x.sign() < 0) throw std::domain_error("sqrt_exact of a negative rational");
  const Integer num = x.numerator();
  const Integer den = x.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
    return std::nullopt;
  }
  return Rational::canonicalize(Integer(sqrt(num)), Integer(sqrt(den)));
}

Integer pow_integer(unsigned long base, unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) {
  return os << value.to_string();
}

}  // namespace fuchsian
