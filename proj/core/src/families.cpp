#include "fuchsian/families.hpp"

#include <sstream>
#include <stdexcept>

#include "fuchsian/cantor.hpp"

namespace fuchsian {

std::string to_string(Family family) {
  switch (family) {
    case Family::loch_ness: return "loch-ness";
    case Family::cantor: return "cantor";
    case Family::blooming_core: return "blooming-core";
    case Family::blooming_satellite: return "blooming-satellite";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  if (name == "loch-ness") return Family::loch_ness;
  if (name == "cantor") return Family::cantor;
  if (name == "blooming-core") return Family::blooming_core;
  if (name == "blooming-satellite") return Family::blooming_satellite;
  throw std::invalid_argument("unknown generator family '" + name + "'");
}

std::string to_string(Kind kind) {
  switch (kind) {
    case Kind::loch_ness: return "loch-ness";
    case Kind::cantor: return "cantor";
    case Kind::blooming: return "blooming";
  }
  return "unknown";
}

Kind kind_from_string(const std::string& name) {
  if (name == "loch-ness") return Kind::loch_ness;
  if (name == "cantor") return Kind::cantor;
  if (name == "blooming") return Kind::blooming;
  throw std::invalid_argument("unknown family kind '" + name + "'");
}

std::string GeneratorId::label() const {
  std::ostringstream os;
  switch (family) {
    case Family::loch_ness: os << (s == 0 ? "f" : "g") << '_' << n; break;
    case Family::cantor: os << "f_{" << n << ',' << j << '}'; break;
    case Family::blooming_core: os << "F_{" << n << ',' << j << '}'; break;
    case Family::blooming_satellite: os << "(F_{" << n << ',' << j << "})_{" << s << ',' << m << '}'; break;
  }
  if (sign < 0) os << "^-1";
  return os.str();
}

MobiusMatrix pair_from_circles(const Rational& center, const Rational& partner_center, const Rational& radius) {
  if (radius.sign() <= 0) throw std::domain_error("pair_from_circles needs a positive radius");
  const Rational c = Rational(1) / radius;
  const Rational d = -center / radius;
  const Rational a = partner_center / radius;
  const Rational b = (a * d - 1) / c;
  return MobiusMatrix(a, b, c, d);
}

void validate(const GeneratorSpec& spec) {
  const auto fail = [&](const std::string& what) {
    throw std::logic_error(spec.id.label() + ": " + what);
  };
  if (spec.transform.det() != Rational(1)) fail("determinant is " + spec.transform.det().to_string());
  if (isometric_circle(spec.transform) != spec.circle) fail("isometric circle mismatch");
  if (isometric_circle(inverse(spec.transform)) != spec.partner_circle) fail("partner isometric circle mismatch");
  if (classify(spec.transform) != MobiusClass::hyperbolic) fail("not hyperbolic");
}

namespace {

GeneratorSpec make_spec(const GeneratorId& id, const Rational& center, const Rational& partner, const Rational& radius) {
  return GeneratorSpec{id, pair_from_circles(center, partner, radius), HalfCircle(center, radius),
                       HalfCircle(partner, radius)};
}

void check_satellite_branch(int s) {
  if (s < 1 || s > 4) throw std::out_of_range("satellite branch must be in 1..4, got " + std::to_string(s));
}

// The gap (n, j) has length 6u; satellites live in [lo + u, lo + 2u] and
// [lo + 4u, lo + 5u], the m-th pair in a sub-interval of length u/2^m.
Rational sixth_length(unsigned n) { return cantor::third_power(n) / 6; }

Rational satellite_center(const Rational& gap_lo, const Rational& sixth, int s, unsigned m) {
  const Rational step = sixth / Rational(pow_integer(2, m));
  switch (s) {
    case 1: return gap_lo + sixth + step * Rational::canonicalize(17, 10);
    case 2: return gap_lo + sixth + step * Rational::canonicalize(13, 10);
    case 3: return gap_lo + 5 * sixth - step * Rational::canonicalize(13, 10);
    case 4: return gap_lo + 5 * sixth - step * Rational::canonicalize(17, 10);
    default: check_satellite_branch(s);
  }
  return {};
}

int partner_branch(int s) { return s % 2 == 1 ? s + 1 : s - 1; }

}  // namespace

LochNessPair loch_ness_pair(std::int64_t n) {
  const Rational base(static_cast<long>(8 * n));
  GeneratorId f_id{Family::loch_ness, n, 0, 0, 0, +1};
  GeneratorId g_id{Family::loch_ness, n, 0, 1, 0, +1};
  return LochNessPair{make_spec(f_id, base, base + 4, 1), make_spec(g_id, base + 2, base + 6, 1)};
}

Rational core_radius(Kind kind, unsigned n) {
  switch (kind) {
    case Kind::cantor: return cantor::third_power(n) / 4;
    case Kind::blooming: return cantor::third_power(n) / 12;
    case Kind::loch_ness: return Rational(1);
  }
  return Rational(1);
}

GeneratorSpec cantor_pair(unsigned n, std::uint64_t j) {
  const Rational center = cantor::gap_midpoint(n, j);
  return make_spec(GeneratorId{Family::cantor, static_cast<std::int64_t>(n), j, 0, 0, +1}, center, -center,
                   core_radius(Kind::cantor, n));
}

GeneratorSpec blooming_core_pair(unsigned n, std::uint64_t j) {
  const Rational center = cantor::gap_midpoint(n, j);
  return make_spec(GeneratorId{Family::blooming_core, static_cast<std::int64_t>(n), j, 0, 0, +1}, center, -center,
                   core_radius(Kind::blooming, n));
}

GeneratorSpec blooming_satellite(unsigned n, std::uint64_t j, int s, unsigned m) {
  check_satellite_branch(s);
  if (m == 0) throw std::out_of_range("satellite depth starts at 1");
  const cantor::Gap host = cantor::gap(n, j);
  const Rational sixth = sixth_length(n);
  const Rational center = satellite_center(host.lo, sixth, s, m);
  const Rational partner = -satellite_center(host.lo, sixth, partner_branch(s), m);
  const Rational radius = sixth / Rational(pow_integer(2, m)) / 10;
  return make_spec(GeneratorId{Family::blooming_satellite, static_cast<std::int64_t>(n), j, s, m, +1}, center,
                   partner, radius);
}

std::pair<Rational, Rational> satellite_host_interval(unsigned n, std::uint64_t j, int s) {
  check_satellite_branch(s);
  const cantor::Gap host = cantor::gap(n, j);
  const Rational sixth = sixth_length(n);
  if (s <= 2) return {host.lo + sixth, host.lo + 2 * sixth};
  return {host.lo + 4 * sixth, host.lo + 5 * sixth};
}

std::vector<GeneratorSpec> truncate(Kind kind, unsigned level, unsigned depth) {
  std::vector<GeneratorSpec> out;
  switch (kind) {
    case Kind::loch_ness: {
      const auto span = static_cast<std::int64_t>(level);
      for (std::int64_t n = -span; n <= span; ++n) {
        auto pair = loch_ness_pair(n);
        out.push_back(std::move(pair.f));
        out.push_back(std::move(pair.g));
      }
      break;
    }
    case Kind::cantor:
      for (unsigned n = 1; n <= level; ++n) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 1)); ++j) out.push_back(cantor_pair(n, j));
      }
      break;
    case Kind::blooming:
      for (unsigned n = 1; n <= level; ++n) {
        for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 1)); ++j) {
          out.push_back(blooming_core_pair(n, j));
          for (int s = 1; s <= 4; ++s) {
            for (unsigned m = 1; m <= depth; ++m) out.push_back(blooming_satellite(n, j, s, m));
          }
        }
      }
      break;
  }
  return out;
}

}  // namespace fuchsian
