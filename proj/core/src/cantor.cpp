#include "fuchsian/cantor.hpp"

#include <stdexcept>

namespace fuchsian::cantor {

namespace {

constexpr unsigned kMaxLevel = 62;
constexpr unsigned kMaxOracleLevel = 20;

void check_level(unsigned n) {
  if (n > kMaxLevel) throw std::out_of_range("cantor level " + std::to_string(n) + " exceeds " + std::to_string(kMaxLevel));
}

void check_gap_index(unsigned n, std::uint64_t j) {
  if (n == 0) throw std::out_of_range("gaps start at level 1");
  check_level(n);
  if (j >= (std::uint64_t{1} << (n - 1))) {
    throw std::out_of_range("gap index " + std::to_string(j) + " out of range at level " + std::to_string(n));
  }
}

}  // namespace

Integer s_of(std::uint64_t k) {
  Integer s = 0;
  Integer power = 1;
  for (; k != 0; k >>= 1) {
    if (k & 1u) s += 2 * power;
    power *= 3;
  }
  return s;
}

Rational third_power(unsigned n) { return Rational::canonicalize(Integer(1), pow_integer(3, n)); }

LevelInterval interval(unsigned n, std::uint64_t k) {
  check_level(n);
  if (k >= (std::uint64_t{1} << n)) throw std::out_of_range("interval index out of range");
  const Integer scale = pow_integer(3, n);
  const Integer s = s_of(k);
  return LevelInterval{n, k, Rational::canonicalize(scale + s, scale), Rational::canonicalize(scale + s + 1, scale)};
}

std::vector<LevelInterval> intervals(unsigned n) {
  check_level(n);
  std::vector<LevelInterval> out;
  const std::uint64_t count = std::uint64_t{1} << n;
  out.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) out.push_back(interval(n, k));
  return out;
}

std::vector<LevelInterval> oracle_intervals(unsigned n) {
  if (n > kMaxOracleLevel) throw std::out_of_range("oracle_intervals is limited to level 20");
  std::vector<std::pair<Rational, Rational>> current{{Rational(1), Rational(2)}};
  for (unsigned level = 0; level < n; ++level) {
    std::vector<std::pair<Rational, Rational>> next;
    next.reserve(current.size() * 2);
    for (const auto& [lo, hi] : current) {
      const Rational third = (hi - lo) / 3;
      next.emplace_back(lo, lo + third);
      next.emplace_back(hi - third, hi);
    }
    current = std::move(next);
  }
  std::vector<LevelInterval> out;
  out.reserve(current.size());
  for (std::uint64_t k = 0; k < current.size(); ++k) {
    out.push_back(LevelInterval{n, k, current[k].first, current[k].second});
  }
  return out;
}

Gap gap(unsigned n, std::uint64_t j) {
  check_gap_index(n, j);
  const Integer scale = pow_integer(3, n);
  return Gap{n, j, Rational::canonicalize(scale + s_of(2 * j) + 1, scale),
             Rational::canonicalize(scale + s_of(2 * j + 1), scale)};
}

std::vector<Gap> gaps(unsigned n) {
  if (n == 0) throw std::out_of_range("gaps start at level 1");
  check_level(n);
  std::vector<Gap> out;
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint64_t j = 0; j < count; ++j) out.push_back(gap(n, j));
  return out;
}

Rational gap_midpoint(unsigned n, std::uint64_t j) {
  check_gap_index(n, j);
  const Integer scale = pow_integer(3, n);
  return Rational(1) + Rational::canonicalize(2 * s_of(2 * j) + 3, 2 * scale);
}

std::optional<std::string> address(const Rational& x, unsigned n) {
  if (x < Rational(1) || x > Rational(2)) return std::nullopt;
  std::string bits;
  bits.reserve(n);
  Rational lo = 1;
  Rational length = 1;
  for (unsigned level = 0; level < n; ++level) {
    length /= 3;
    if (x <= lo + length) {
      bits.push_back('0');
    } else if (x >= lo + 2 * length) {
      bits.push_back('1');
      lo += 2 * length;
    } else {
      return std::nullopt;
    }
  }
  return bits;
}

}  // namespace fuchsian::cantor
