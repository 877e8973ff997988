#pragma once

/**
 * @file hyperbolic.hpp
 * @brief Upper half-plane geometry over exact rationals.
 *
 * Möbius transformations are stored projectively as 2x2 rational matrices
 * with positive determinant; they are never normalized to determinant one,
 * so that transformations such as the strip transport (whose unit-determinant
 * form carries a square root) stay rational. Every predicate below uses a
 * scale-invariant formula.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "fuchsian/rational.hpp"

namespace fuchsian {

/// A point of the upper half-plane, im > 0.
struct UpperPoint {
  Rational re;
  Rational im;

  /// Throws std::domain_error unless im > 0.
  UpperPoint(Rational re_part, Rational im_part);

  friend bool operator==(const UpperPoint&, const UpperPoint&) = default;
};

/// A point of the boundary R ∪ {∞}.
class ExtendedReal {
 public:
  ExtendedReal(Rational value) : value_(std::move(value)) {}  // NOLINT: implicit
  static ExtendedReal infinity() { return ExtendedReal(); }

  bool is_infinite() const { return !value_.has_value(); }
  /// Throws std::logic_error on ∞.
  const Rational& value() const;
  std::string to_string() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  ExtendedReal() = default;
  std::optional<Rational> value_;
};

/// Geodesic half-circle with real center and positive radius.
struct HalfCircle {
  Rational center;
  Rational radius;

  /// Throws std::domain_error unless radius > 0.
  HalfCircle(Rational c, Rational r);
  /// The half-circle whose endpoints are lo < hi.
  static HalfCircle from_endpoints(const Rational& lo, const Rational& hi);

  Rational left() const { return center - radius; }
  Rational right() const { return center + radius; }
  UpperPoint apex() const { return UpperPoint(center, radius); }

  friend bool operator==(const HalfCircle&, const HalfCircle&) = default;
};

/// Vertical geodesic Re(z) = x.
struct VerticalLine {
  Rational x;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

using Geodesic = std::variant<HalfCircle, VerticalLine>;

/// Open strip left < Re(z) < right.
struct Strip {
  Rational left;
  Rational right;
  friend bool operator==(const Strip&, const Strip&) = default;
};

class MobiusMatrix {
 public:
  /// Throws std::domain_error unless ad - bc > 0.
  MobiusMatrix(Rational a, Rational b, Rational c, Rational d);
  static MobiusMatrix identity() { return MobiusMatrix(1, 0, 0, 1); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  Rational det() const { return a_ * d_ - b_ * c_; }
  Rational trace() const { return a_ + d_; }

  /// Same transformation: the entry vectors differ by a nonzero scalar.
  bool projectively_equal(const MobiusMatrix& other) const;

  /// Entry-wise equality (not projective).
  friend bool operator==(const MobiusMatrix&, const MobiusMatrix&) = default;

 private:
  Rational a_, b_, c_, d_;
};

enum class MobiusClass { identity, elliptic, parabolic, hyperbolic };

std::string to_string(MobiusClass kind);

UpperPoint apply(const MobiusMatrix& m, const UpperPoint& z);
ExtendedReal apply_boundary(const MobiusMatrix& m, const ExtendedReal& x);

/// Matrix product: compose(m1, m2) acts as m1 ∘ m2.
MobiusMatrix compose(const MobiusMatrix& m1, const MobiusMatrix& m2);
/// Adjugate.
MobiusMatrix inverse(const MobiusMatrix& m);

MobiusClass classify(const MobiusMatrix& m);

/// Isometric circle: center -d/c, radius sqrt(det)/|c|.
/// Throws std::domain_error when c = 0 or det is not a perfect square.
HalfCircle isometric_circle(const MobiusMatrix& m);

/// [[α, -α²-r²], [1, -α]]: order-two map fixing the apex of C and
/// exchanging its endpoints.
MobiusMatrix reflection_in(const HalfCircle& circle);

bool inside_strict(const HalfCircle& circle, const UpperPoint& z);
bool inside_closed(const HalfCircle& circle, const UpperPoint& z);
bool outside_strict(const HalfCircle& circle, const UpperPoint& z);
bool outside_closed(const HalfCircle& circle, const UpperPoint& z);
bool on_circle(const HalfCircle& circle, const UpperPoint& z);

/// True iff m maps the endpoints of C(m) onto the endpoints of C(m⁻¹).
/// Propagates isometric_circle errors.
bool circle_pairing_check(const MobiusMatrix& m);

Strip strip_of(const HalfCircle& circle);
/// |α1 - α2| >= 2(r1 + r2): the open strips α ± 2r do not meet.
bool strips_disjoint(const HalfCircle& c1, const HalfCircle& c2);

struct SeparationWitness {
  std::size_t first;
  std::size_t second;
  friend bool operator==(const SeparationWitness&, const SeparationWitness&) = default;
};

/// Either ε = (max radius)/2, or the first pair (in (i, j) lexicographic
/// order) whose strips meet. Throws std::invalid_argument on an empty list.
std::variant<Rational, SeparationWitness> separation_epsilon(std::span<const HalfCircle> circles);

/// [[r2, r1·α2 - r2·α1], [0, r1]]: the affine map carrying the strip of C1
/// onto the strip of C2, α1 ↦ α2.
MobiusMatrix strip_transport(const HalfCircle& c1, const HalfCircle& c2);

/// Image of a geodesic half-circle; a vertical line when an endpoint maps to ∞.
Geodesic image_of(const MobiusMatrix& m, const HalfCircle& circle);

}  // namespace fuchsian
