#pragma once

/**
 * @file topology.hpp
 * @brief Topology of truncated quotients and the binary coding of ends.
 *
 * For a finite description with pairwise non-overlapping circles, the ideal
 * boundary of the fundamental domain is a union of real arcs between
 * consecutive circles plus one arc through ∞ (tangencies give zero-length
 * arcs). Each generator glues the arc abutting an endpoint of C_k to the arc
 * abutting its image endpoint on C_{-k}; the cycles of this identification
 * are the boundary cycles b of the quotient. With χ = 1 - m for a free group
 * of rank m and χ = 2 - 2g - b, the genus is g = (1 + m - b)/2.
 */

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuchsian/families.hpp"
#include "fuchsian/schottky.hpp"

namespace fuchsian {

enum class Side { left, right };

/// One endpoint of one circle.
struct EndpointFlag {
  int index;
  Side side;
  friend bool operator==(const EndpointFlag&, const EndpointFlag&) = default;
};

/// Real arc of the ideal boundary, from the right endpoint of one circle to
/// the left endpoint of the next; the last arc wraps through ∞.
struct BoundaryArc {
  EndpointFlag from;
  EndpointFlag to;
  bool through_infinity = false;
  bool degenerate = false;  // tangency point
};

struct BoundaryCycles {
  std::vector<BoundaryArc> arcs;
  /// Arc indices along each cycle.
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t count() const { return cycles.size(); }
};

/// Thrown when the description cannot be read as a surface (overlapping or
/// nested circles, or a generator that does not carry C_k onto C_{-k}).
class TopologyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BoundaryCycles boundary_cycles(const SchottkyDescription& desc);

struct SurfaceSignature {
  std::size_t rank = 0;
  std::size_t boundary_cycles = 0;
  std::size_t genus = 0;
  long euler = 0;
  friend bool operator==(const SurfaceSignature&, const SurfaceSignature&) = default;
};

/// Throws TopologyError when (1 + m - b)/2 is not a non-negative integer.
SurfaceSignature signature(const SchottkyDescription& desc);

std::string to_string(const SurfaceSignature& sig);

/// Element of 2^n; bits are '0'/'1'.
class EndCode {
 public:
  /// Throws std::invalid_argument on characters other than '0' and '1'.
  explicit EndCode(std::string bits);
  const std::string& bits() const { return bits_; }
  std::size_t level() const { return bits_.size(); }
  bool is_prefix_of(const EndCode& other) const;
  friend bool operator==(const EndCode&, const EndCode&) = default;
  friend auto operator<=>(const EndCode&, const EndCode&) = default;

 private:
  std::string bits_;
};

/// −(n+1) <= Re <= n+1, r(n) <= Im <= n.
struct ExhaustionBox {
  unsigned level;
  Rational re_min;
  Rational re_max;
  Rational im_min;
  Rational im_max;

  static ExhaustionBox at(Kind kind, unsigned level);
  bool contains(const UpperPoint& z) const;
};

struct ComponentCode {
  enum class Where { core, end, gap };
  Where where;
  std::optional<EndCode> code;  // set iff where == end
};

/// core when z lies in the level-n exhaustion box; otherwise the level-n
/// address of |Re z|, or gap when |Re z| is not in any level-n interval.
/// Throws std::invalid_argument for n == 0.
ComponentCode component_code(const UpperPoint& z, unsigned n, Kind kind = Kind::cantor);

/// The nested prefixes (x1), (x1, x2), ... of an infinite bit stream.
std::vector<EndCode> end_path(const std::function<bool(std::size_t)>& bit, std::size_t depth);

enum class EndGenus { planar, infinite_genus };
std::string to_string(EndGenus genus);

EndGenus end_genus_flags(Kind kind, const EndCode& code);

}  // namespace fuchsian
