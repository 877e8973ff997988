#pragma once

// SVG 1.1 pictures of a description's circles, its fundamental domain, and
// optional tessellation tiles. The only place rationals become doubles.

#include <span>
#include <string>
#include <string_view>

#include "fuchsian/schottky.hpp"

namespace fuchsian {

struct RenderSpec {
  Rational x_min = -2;
  Rational x_max = 2;
  Rational height = 1;
  int width_px = 1000;

  /// "xmin:xmax:height", e.g. "-2.5:2.5:1.2". Throws std::invalid_argument.
  static RenderSpec from_window(std::string_view window, int width_px = 1000);
  /// Throws std::invalid_argument unless x_min < x_max, height > 0, width_px > 0.
  void validate() const;
  int height_px() const;
};

std::string render_svg(const SchottkyDescription& desc, std::span<const Tile> tiles, const RenderSpec& spec);

}  // namespace fuchsian
