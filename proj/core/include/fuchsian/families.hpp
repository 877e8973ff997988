#pragma once

/**
 * @file families.hpp
 * @brief Generator families for the three infinite-type surfaces.
 *
 *  - Loch Ness monster: f_n pairs the unit circles at 8n and 8n+4, g_n those
 *    at 8n+2 and 8n+6, for every integer n.
 *  - Cantor tree: one pair per removed gap (n, j), centered at ±(gap
 *    midpoint) with radius 1/(4·3^n).
 *  - Blooming Cantor tree: the same core pairs with radius 1/(12·3^n), plus
 *    four satellite sequences per gap accumulating at the core's sixths.
 *
 * Every generator is built by pair_from_circles from its target pair of
 * isometric circles; determinant one holds exactly.
 */

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "fuchsian/hyperbolic.hpp"

namespace fuchsian {

enum class Family { loch_ness, cantor, blooming_core, blooming_satellite };

std::string to_string(Family family);
/// Throws std::invalid_argument for unknown names.
Family family_from_string(const std::string& name);

struct GeneratorId {
  Family family = Family::cantor;
  std::int64_t n = 0;    // level, or strip index for loch-ness
  std::uint64_t j = 0;   // gap index (0 for loch-ness)
  int s = 0;             // loch-ness: 0 = f_n, 1 = g_n; satellites: branch 1..4
  unsigned m = 0;        // satellite depth, >= 1 for satellites
  int sign = +1;         // +1 generator, -1 inverse

  std::string label() const;

  friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

struct GeneratorSpec {
  GeneratorId id;
  MobiusMatrix transform;
  HalfCircle circle;          // isometric circle of transform
  HalfCircle partner_circle;  // isometric circle of the inverse
};

/// c = 1/r, d = -α/r, a = α'/r, b = (ad - 1)/c. Determinant one; isometric
/// circle (α, r); inverse's circle (α', r). Throws std::domain_error if r <= 0.
MobiusMatrix pair_from_circles(const Rational& center, const Rational& partner_center, const Rational& radius);

/// Throws std::logic_error naming the broken invariant.
void validate(const GeneratorSpec& spec);

struct LochNessPair {
  GeneratorSpec f;
  GeneratorSpec g;
};

LochNessPair loch_ness_pair(std::int64_t n);

/// Radius 1/(4·3^n) at the level-n gap j. Throws std::out_of_range.
GeneratorSpec cantor_pair(unsigned n, std::uint64_t j);

/// Radius 1/(12·3^n) at the level-n gap j. Throws std::out_of_range.
GeneratorSpec blooming_core_pair(unsigned n, std::uint64_t j);

/// Satellite (n, j, s, m): s = 1, 2 inside the second sixth of the gap,
/// s = 3, 4 inside the fifth sixth; radius 1/(60·3^n·2^m). s = 1 pairs with
/// the mirror of s = 2 at the same depth, s = 3 with the mirror of s = 4.
/// Throws std::out_of_range when s ∉ 1..4 or m == 0.
GeneratorSpec blooming_satellite(unsigned n, std::uint64_t j, int s, unsigned m);

/// Closed sixth-subinterval of gap (n, j) hosting satellite branch s:
/// the second sixth for s ∈ {1, 2}, the fifth for s ∈ {3, 4}.
std::pair<Rational, Rational> satellite_host_interval(unsigned n, std::uint64_t j, int s);

/// Core radius r(n) of the given kind (cantor 1/(4·3^n), blooming 1/(12·3^n)).
enum class Kind { loch_ness, cantor, blooming };
std::string to_string(Kind kind);
/// Throws std::invalid_argument for unknown names.
Kind kind_from_string(const std::string& name);

Rational core_radius(Kind kind, unsigned n);

/// Canonically ordered generator list:
///   loch-ness: f_n, g_n for n = -level..level;
///   cantor: all gaps of levels 1..level;
///   blooming: per gap, the core then satellites s = 1..4, m = 1..depth.
std::vector<GeneratorSpec> truncate(Kind kind, unsigned level, unsigned depth = 0);

}  // namespace fuchsian
