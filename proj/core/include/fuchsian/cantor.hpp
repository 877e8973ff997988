#pragma once

/**
 * @file cantor.hpp
 * @brief Middle-thirds combinatorics on [1, 2].
 *
 * Level n keeps 2^n closed intervals [1 + s_k/3^n, 1 + (s_k+1)/3^n], where
 * s_k is k read in binary with every digit doubled and reinterpreted in base
 * three. The gaps removed at level n are indexed by j in [0, 2^(n-1)) and sit
 * between the kept intervals 2j and 2j+1.
 */

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fuchsian/rational.hpp"

namespace fuchsian::cantor {

struct LevelInterval {
  unsigned level;
  std::uint64_t index;
  Rational lo;
  Rational hi;
  friend bool operator==(const LevelInterval&, const LevelInterval&) = default;
};

struct Gap {
  unsigned level;
  std::uint64_t index;
  Rational lo;
  Rational hi;
  Rational midpoint() const { return (lo + hi) / 2; }
  friend bool operator==(const Gap&, const Gap&) = default;
};

/// s_k = Σ 2·t_i·3^i for k = Σ t_i·2^i.
Integer s_of(std::uint64_t k);

/// 1/3^n
Rational third_power(unsigned n);

/// 2^n sorted intervals of length 1/3^n. Throws std::out_of_range for n > 62.
std::vector<LevelInterval> intervals(unsigned n);

/// Same list, by literally removing middle thirds n times (no s_k).
/// Throws std::out_of_range for n > 20.
std::vector<LevelInterval> oracle_intervals(unsigned n);

LevelInterval interval(unsigned n, std::uint64_t k);

/// Gaps removed at level n >= 1. Throws std::out_of_range for n == 0.
std::vector<Gap> gaps(unsigned n);
/// Throws std::out_of_range unless n >= 1 and j < 2^(n-1).
Gap gap(unsigned n, std::uint64_t j);

/// 1 + (2·s_{2j} + 3)/(2·3^n).
Rational gap_midpoint(unsigned n, std::uint64_t j);

/// Binary address of x among the level-n intervals (bit i picks the lower or
/// upper child at level i+1); std::nullopt when x lies outside [1, 2] or in a
/// removed gap.
std::optional<std::string> address(const Rational& x, unsigned n);

}  // namespace fuchsian::cantor
