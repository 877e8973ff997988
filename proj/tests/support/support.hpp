#pragma once

// Hand-rolled generators and independent oracles shared by the unit and
// acceptance tests. Nothing here calls the library routine it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <fuchsian/hyperbolic.hpp>
#include <fuchsian/rational.hpp>
#include <fuchsian/schottky.hpp>

namespace fuchsian::testing {

inline Rational q(const char* text) { return Rational::parse(text); }

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }
  std::size_t index(std::size_t size) { return static_cast<std::size_t>(integer(0, static_cast<long>(size) - 1)); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long max_abs_num = 1000, long max_den = 1000) {
    return Rational::canonicalize(integer(-max_abs_num, max_abs_num), integer(1, max_den));
  }
  Rational positive(long max_num = 1000, long max_den = 1000) {
    return Rational::canonicalize(integer(1, max_num), integer(1, max_den));
  }
  UpperPoint upper(long max_abs_num = 1000, long max_den = 1000) {
    return UpperPoint(rational(max_abs_num, max_den), positive(max_abs_num, max_den));
  }
  MobiusMatrix matrix() {
    for (;;) {
      const Rational a = rational(50, 10), b = rational(50, 10), c = rational(50, 10), d = rational(50, 10);
      if ((a * d - b * c).sign() > 0) return MobiusMatrix(a, b, c, d);
    }
  }

  /// Uniform-ish freely reduced word of exactly `len` letters.
  ReducedWord word(const SchottkyDescription& desc, std::size_t len) {
    std::vector<int> letters;
    while (letters.size() < len) {
      const int k = desc.entries()[index(desc.size())].index;
      if (!letters.empty() && letters.back() == -k) continue;
      letters.push_back(k);
    }
    return ReducedWord(std::move(letters));
  }

 private:
  std::mt19937_64 engine_;
};

/// Number of boundary cycles by union-find over the real arcs between
/// consecutive circle endpoints. Endpoint images come from the matrix
/// entries directly and partners are found by linear scan.
inline std::size_t oracle_boundary_count(const SchottkyDescription& desc) {
  struct Disc {
    int index;
    Rational lo, hi;
  };
  std::vector<Disc> discs;
  for (const auto& e : desc.entries()) discs.push_back({e.index, e.lo, e.hi});
  if (discs.empty()) return 0;
  std::sort(discs.begin(), discs.end(), [](const Disc& x, const Disc& y) { return x.lo < y.lo; });
  const std::size_t n = discs.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto position = [&](int index) {
    for (std::size_t i = 0; i < n; ++i)
      if (discs[i].index == index) return i;
    throw std::logic_error("missing index");
  };
  // Arc i runs from disc i's right endpoint to disc i+1's left endpoint.
  auto arc_at = [&](std::size_t pos, bool right) { return right ? pos : (pos + n - 1) % n; };

  for (const auto& e : desc.entries()) {
    if (e.index < 0) continue;
    const auto& m = e.transform;
    const std::size_t here = position(e.index);
    const std::size_t there = position(-e.index);
    for (bool right : {false, true}) {
      const Rational x = right ? e.hi : e.lo;
      const Rational image = (m.a() * x + m.b()) / (m.c() * x + m.d());
      bool image_right;
      if (image == discs[there].lo) {
        image_right = false;
      } else if (image == discs[there].hi) {
        image_right = true;
      } else {
        throw std::logic_error("endpoint does not land on partner circle");
      }
      parent[find(arc_at(here, right))] = find(arc_at(there, image_right));
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) roots += find(i) == i;
  return roots;
}

/// Intervals of the level-n middle-thirds set as [1 + t/3^n, 1 + (t+1)/3^n]
/// for the t in 0..3^n-1 whose n base-3 digits avoid 1.
inline std::vector<std::pair<Rational, Rational>> ternary_intervals(unsigned n) {
  std::uint64_t denom = 1;
  for (unsigned i = 0; i < n; ++i) denom *= 3;
  std::vector<std::pair<Rational, Rational>> out;
  for (std::uint64_t t = 0; t < denom; ++t) {
    bool keep = true;
    for (std::uint64_t x = t; x > 0 && keep; x /= 3) keep = x % 3 != 1;
    if (!keep) continue;
    const Integer den(std::to_string(denom));
    out.emplace_back(Rational(1) + Rational::canonicalize(Integer(std::to_string(t)), den),
                     Rational(1) + Rational::canonicalize(Integer(std::to_string(t + 1)), den));
  }
  return out;
}

}  // namespace fuchsian::testing
