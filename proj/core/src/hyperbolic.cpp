#include "fuchsian/hyperbolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace fuchsian {

UpperPoint::UpperPoint(Rational re_part, Rational im_part)
    : re(std::move(re_part)), im(std::move(im_part)) {
  if (im.sign() <= 0) throw std::domain_error("point not in the upper half-plane: im = " + im.to_string());
}

const Rational& ExtendedReal::value() const {
  if (!value_) throw std::logic_error("ExtendedReal::value() on infinity");
  return *value_;
}

std::string ExtendedReal::to_string() const { return value_ ? value_->to_string() : "inf"; }

HalfCircle::HalfCircle(Rational c, Rational r) : center(std::move(c)), radius(std::move(r)) {
  if (radius.sign() <= 0) throw std::domain_error("half-circle radius must be positive");
}

HalfCircle HalfCircle::from_endpoints(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::domain_error("half-circle endpoints must satisfy lo < hi");
  return HalfCircle((lo + hi) / 2, (hi - lo) / 2);
}

MobiusMatrix::MobiusMatrix(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
  if (det().sign() <= 0) throw std::domain_error("Möbius matrix determinant must be positive, got " + det().to_string());
}

bool MobiusMatrix::projectively_equal(const MobiusMatrix& other) const {
  const Rational* lhs[] = {&a_, &b_, &c_, &d_};
  const Rational* rhs[] = {&other.a_, &other.b_, &other.c_, &other.d_};
  // Rank-one test on the 2x4 matrix of entry vectors.
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (*lhs[i] * *rhs[j] != *lhs[j] * *rhs[i]) return false;
    }
  }
  return true;
}

std::string to_string(MobiusClass kind) {
  switch (kind) {
    case MobiusClass::identity: return "identity";
    case MobiusClass::elliptic: return "elliptic";
    case MobiusClass::parabolic: return "parabolic";
    case MobiusClass::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

UpperPoint apply(const MobiusMatrix& m, const UpperPoint& z) {
  // (az+b)/(cz+d) = (az+b)(c z̄ + d) / |cz+d|^2
  const Rational cx_d = m.c() * z.re + m.d();
  const Rational cy = m.c() * z.im;
  const Rational norm = cx_d * cx_d + cy * cy;
  const Rational ax_b = m.a() * z.re + m.b();
  const Rational re = (ax_b * cx_d + m.a() * cy * z.im) / norm;
  const Rational im = m.det() * z.im / norm;
  return UpperPoint(re, im);
}

ExtendedReal apply_boundary(const MobiusMatrix& m, const ExtendedReal& x) {
  if (x.is_infinite()) {
    if (m.c().is_zero()) return ExtendedReal::infinity();
    return m.a() / m.c();
  }
  const Rational den = m.c() * x.value() + m.d();
  if (den.is_zero()) return ExtendedReal::infinity();
  return (m.a() * x.value() + m.b()) / den;
}

MobiusMatrix compose(const MobiusMatrix& m1, const MobiusMatrix& m2) {
  return MobiusMatrix(m1.a() * m2.a() + m1.b() * m2.c(), m1.a() * m2.b() + m1.b() * m2.d(),
                      m1.c() * m2.a() + m1.d() * m2.c(), m1.c() * m2.b() + m1.d() * m2.d());
}

MobiusMatrix inverse(const MobiusMatrix& m) { return MobiusMatrix(m.d(), -m.b(), -m.c(), m.a()); }

MobiusClass classify(const MobiusMatrix& m) {
  if (m.b().is_zero() && m.c().is_zero() && m.a() == m.d()) return MobiusClass::identity;
  const Rational tr = m.trace();
  const Rational lhs = tr * tr;
  const Rational rhs = 4 * m.det();
  if (lhs > rhs) return MobiusClass::hyperbolic;
  if (lhs == rhs) return MobiusClass::parabolic;
  return MobiusClass::elliptic;
}

HalfCircle isometric_circle(const MobiusMatrix& m) {
  if (m.c().is_zero()) throw std::domain_error("affine transformation (c = 0) has no isometric circle");
  auto root = sqrt_exact(m.det());
  if (!root) throw std::domain_error("determinant " + m.det().to_string() + " is not a perfect square");
  return HalfCircle(-m.d() / m.c(), *root / m.c().abs());
}

MobiusMatrix reflection_in(const HalfCircle& circle) {
  const Rational& alpha = circle.center;
  const Rational& r = circle.radius;
  return MobiusMatrix(alpha, -alpha * alpha - r * r, 1, -alpha);
}

namespace {

// sign of |z - α|^2 - r^2
int power_sign(const HalfCircle& circle, const UpperPoint& z) {
  const Rational dx = z.re - circle.center;
  return (dx * dx + z.im * z.im - circle.radius * circle.radius).sign();
}

}  // namespace

bool inside_strict(const HalfCircle& circle, const UpperPoint& z) { return power_sign(circle, z) < 0; }
bool inside_closed(const HalfCircle& circle, const UpperPoint& z) { return power_sign(circle, z) <= 0; }
bool outside_strict(const HalfCircle& circle, const UpperPoint& z) { return power_sign(circle, z) > 0; }
bool outside_closed(const HalfCircle& circle, const UpperPoint& z) { return power_sign(circle, z) >= 0; }
bool on_circle(const HalfCircle& circle, const UpperPoint& z) { return power_sign(circle, z) == 0; }

bool circle_pairing_check(const MobiusMatrix& m) {
  const HalfCircle source = isometric_circle(m);
  const HalfCircle target = isometric_circle(inverse(m));
  const ExtendedReal lo = apply_boundary(m, source.left());
  const ExtendedReal hi = apply_boundary(m, source.right());
  const ExtendedReal t_lo = target.left();
  const ExtendedReal t_hi = target.right();
  return (lo == t_lo && hi == t_hi) || (lo == t_hi && hi == t_lo);
}

Strip strip_of(const HalfCircle& circle) {
  return Strip{circle.center - 2 * circle.radius, circle.center + 2 * circle.radius};
}

bool strips_disjoint(const HalfCircle& c1, const HalfCircle& c2) {
  return (c1.center - c2.center).abs() >= 2 * (c1.radius + c2.radius);
}

std::variant<Rational, SeparationWitness> separation_epsilon(std::span<const HalfCircle> circles) {
  if (circles.empty()) throw std::invalid_argument("separation_epsilon needs at least one circle");
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      if (!strips_disjoint(circles[i], circles[j])) return SeparationWitness{i, j};
    }
  }
  const auto widest = std::max_element(circles.begin(), circles.end(),
                                       [](const HalfCircle& x, const HalfCircle& y) { return x.radius < y.radius; });
  return widest->radius / 2;
}

MobiusMatrix strip_transport(const HalfCircle& c1, const HalfCircle& c2) {
  return MobiusMatrix(c2.radius, c1.radius * c2.center - c2.radius * c1.center, 0, c1.radius);
}

Geodesic image_of(const MobiusMatrix& m, const HalfCircle& circle) {
  const ExtendedReal p = apply_boundary(m, circle.left());
  const ExtendedReal q = apply_boundary(m, circle.right());
  if (p.is_infinite()) return VerticalLine{q.value()};
  if (q.is_infinite()) return VerticalLine{p.value()};
  const Rational& x = p.value();
  const Rational& y = q.value();
  return x < y ? HalfCircle::from_endpoints(x, y) : HalfCircle::from_endpoints(y, x);
}

}  // namespace fuchsian
