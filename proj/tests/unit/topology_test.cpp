#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include <fuchsian/families.hpp>
#include <fuchsian/topology.hpp>

#include "support.hpp"

using namespace fuchsian;
using fuchsian::testing::Gen;
using fuchsian::testing::oracle_boundary_count;
using fuchsian::testing::q;

namespace {

SchottkyDescription family(Kind kind, unsigned level, unsigned depth = 0) {
  return describe(truncate(kind, level, depth));
}

SchottkyDescription cantor_single_level(unsigned n) {
  std::vector<GeneratorSpec> specs;
  for (std::uint64_t j = 0; j < (std::uint64_t{1} << (n - 1)); ++j) specs.push_back(cantor_pair(n, j));
  return describe(specs);
}

SurfaceSignature sig(std::size_t m, std::size_t b, std::size_t g) {
  return SurfaceSignature{m, b, g, 1 - static_cast<long>(m)};
}

}  // namespace

TEST(BoundaryCycles, Examples) {
  EXPECT_EQ(boundary_cycles(family(Kind::loch_ness, 0)).count(), 1u);
  EXPECT_EQ(boundary_cycles(family(Kind::cantor, 1)).count(), 2u);
  EXPECT_EQ(boundary_cycles(family(Kind::cantor, 2)).count(), 4u);
}

TEST(BoundaryCycles, ArcsAndTangencies) {
  const auto cycles = boundary_cycles(family(Kind::loch_ness, 0));
  ASSERT_EQ(cycles.arcs.size(), 4u);
  int degenerate = 0, infinite = 0;
  for (const auto& arc : cycles.arcs) {
    degenerate += arc.degenerate;
    infinite += arc.through_infinity;
  }
  EXPECT_EQ(degenerate, 3);
  EXPECT_EQ(infinite, 1);
  std::size_t total = 0;
  for (const auto& c : cycles.cycles) total += c.size();
  EXPECT_EQ(total, cycles.arcs.size());
}

TEST(BoundaryCycles, AgreesWithUnionFindOracle) {
  const std::vector<SchottkyDescription> descs{
      family(Kind::loch_ness, 0), family(Kind::loch_ness, 3), family(Kind::cantor, 1), family(Kind::cantor, 4),
      family(Kind::blooming, 1, 1), family(Kind::blooming, 2, 2), family(Kind::blooming, 3, 1),
      cantor_single_level(3)};
  for (const auto& d : descs) EXPECT_EQ(boundary_cycles(d).count(), oracle_boundary_count(d));
}

TEST(BoundaryCycles, RejectsOverlap) {
  const auto overlap = describe(std::vector<GeneratorSpec>{
      {GeneratorId{}, pair_from_circles(0, 10, 1), HalfCircle(0, 1), HalfCircle(10, 1)},
      {GeneratorId{}, pair_from_circles(q("3/2"), 20, 1), HalfCircle(q("3/2"), 1), HalfCircle(20, 1)}});
  EXPECT_THROW(boundary_cycles(overlap), TopologyError);
  EXPECT_THROW(signature(overlap), TopologyError);
}

TEST(BoundaryCycles, InvariantUnderReindexing) {
  // Relabel pair t as pair (m - t), keeping transforms.
  const auto desc = family(Kind::blooming, 2, 1);
  const int m = static_cast<int>(desc.pair_count());
  std::vector<SchottkyEntry> relabelled;
  for (auto e : desc.entries()) {
    const int k = e.index > 0 ? m + 1 - e.index : -(m + 1 + e.index);
    e.index = k;
    relabelled.push_back(e);
  }
  EXPECT_EQ(boundary_cycles(SchottkyDescription::from_entries(relabelled)).count(), boundary_cycles(desc).count());
}

TEST(Signature, Examples) {
  EXPECT_EQ(signature(family(Kind::loch_ness, 0)), sig(2, 1, 1));
  EXPECT_EQ(signature(family(Kind::cantor, 1)), sig(1, 2, 0));
  const auto bloom = signature(family(Kind::blooming, 1, 1));
  EXPECT_EQ(bloom.rank, 5u);
  EXPECT_GE(bloom.genus, 1u);
  EXPECT_EQ(bloom, sig(5, 2, 2));
  EXPECT_EQ(to_string(sig(2, 1, 1)), "m=2 b=1 genus=1 chi=-1");
}

TEST(Signature, ClosedForms) {
  for (unsigned n = 1; n <= 6; ++n) {
    const std::size_t m = (std::size_t{1} << n) - 1;
    EXPECT_EQ(signature(family(Kind::cantor, n)), sig(m, m + 1, 0)) << n;
  }
  for (unsigned n = 0; n <= 5; ++n) EXPECT_EQ(signature(family(Kind::loch_ness, n)), sig(4 * n + 2, 1, 2 * n + 1));
  for (unsigned depth = 0; depth <= 5; ++depth) {
    EXPECT_EQ(signature(family(Kind::blooming, 1, depth)), sig(1 + 4 * depth, 2, 2 * depth)) << depth;
  }
}

TEST(Signature, EulerConsistencyOnVerifiedTruncations) {
  for (unsigned level = 1; level <= 6; ++level) {
    const auto s = signature(family(Kind::cantor, level));
    EXPECT_EQ(2 - 2 * static_cast<long>(s.genus) - static_cast<long>(s.boundary_cycles), s.euler);
    EXPECT_EQ(s.euler, 1 - static_cast<long>(s.rank));
  }
  for (unsigned level = 1; level <= 3; ++level) {
    for (unsigned depth = 0; depth <= 4; ++depth) {
      const auto s = signature(family(Kind::blooming, level, depth));
      EXPECT_EQ(2 - 2 * static_cast<long>(s.genus) - static_cast<long>(s.boundary_cycles), s.euler);
    }
  }
}

TEST(Signature, BloomingGenusNonDecreasingInDepth) {
  std::size_t previous = 0;
  for (unsigned depth = 0; depth <= 5; ++depth) {
    const std::size_t g = signature(family(Kind::blooming, 1, depth)).genus;
    EXPECT_GE(g, previous);
    if (depth >= 1) {
      EXPECT_GE(g, 1u);
    }
    previous = g;
  }
}

TEST(Signature, LochNessStripsArePuncturedTori) {
  for (long n = -2; n <= 2; ++n) {
    const auto [f, g] = loch_ness_pair(n);
    const auto strip = describe(std::vector<GeneratorSpec>{f, g});
    for (const auto& e : strip.entries()) {
      EXPECT_LE(Rational(-1 + 8 * n), e.lo);
      EXPECT_LE(e.hi, Rational(7 + 8 * n));
    }
    EXPECT_EQ(signature(strip), sig(2, 1, 1));
  }
}

TEST(Signature, SingleLevelCantorPunctureCount) {
  // Level-n pairs alone: genus 0 forces b = m + 1 = 2^(n-1) + 1.
  for (unsigned n = 1; n <= 5; ++n) {
    const auto s = signature(cantor_single_level(n));
    EXPECT_EQ(s.genus, 0u);
    EXPECT_EQ(s.boundary_cycles, (std::size_t{1} << (n - 1)) + 1);
  }
}

TEST(EndCode, Validation) {
  EXPECT_THROW(EndCode("012"), std::invalid_argument);
  EXPECT_TRUE(EndCode("01").is_prefix_of(EndCode("011")));
  EXPECT_FALSE(EndCode("11").is_prefix_of(EndCode("011")));
  EXPECT_TRUE(EndCode("").is_prefix_of(EndCode("1")));
}

TEST(ExhaustionBox, BoundsAndNesting) {
  const auto box = ExhaustionBox::at(Kind::cantor, 1);
  EXPECT_EQ(box.re_min, Rational(-2));
  EXPECT_EQ(box.re_max, Rational(2));
  EXPECT_EQ(box.im_min, q("1/12"));
  EXPECT_EQ(box.im_max, Rational(1));
  for (Kind kind : {Kind::cantor, Kind::blooming}) {
    for (unsigned n = 1; n < 8; ++n) {
      const auto inner = ExhaustionBox::at(kind, n), outer = ExhaustionBox::at(kind, n + 1);
      EXPECT_LE(outer.re_min, inner.re_min);
      EXPECT_GE(outer.re_max, inner.re_max);
      EXPECT_LE(outer.im_min, inner.im_min);
      EXPECT_GE(outer.im_max, inner.im_max);
    }
  }
}

TEST(ComponentCode, Examples) {
  const auto left = component_code(UpperPoint(1, q("1/100")), 2);
  ASSERT_EQ(left.where, ComponentCode::Where::end);
  EXPECT_EQ(left.code->bits(), "00");
  EXPECT_EQ(component_code(UpperPoint(2, q("1/100")), 2).code->bits(), "11");
  EXPECT_EQ(component_code(UpperPoint(-2, q("1/100")), 2).code->bits(), "11");
  EXPECT_EQ(component_code(UpperPoint(0, 1), 3).where, ComponentCode::Where::core);
  EXPECT_EQ(component_code(UpperPoint(q("3/2"), q("1/100")), 2).where, ComponentCode::Where::gap);
  EXPECT_THROW(component_code(UpperPoint(0, 1), 0), std::invalid_argument);
}

TEST(ComponentCode, CountsMatchPowersOfTwo) {
  for (unsigned n = 1; n <= 6; ++n) {
    const Rational im = core_radius(Kind::cantor, n) / 2;
    const long steps = 4 * 729;
    std::set<std::string> codes;
    for (long t = -steps; t <= steps; ++t) {
      const auto code = component_code(UpperPoint(Rational::canonicalize(3 * t, steps), im), n);
      if (code.where == ComponentCode::Where::end) codes.insert(code.code->bits());
    }
    EXPECT_EQ(codes.size(), std::size_t{1} << n) << n;
  }
}

TEST(EndPath, Examples) {
  auto bits = [](const std::vector<EndCode>& path) {
    std::vector<std::string> out;
    for (const auto& c : path) out.push_back(c.bits());
    return out;
  };
  EXPECT_EQ(bits(end_path([](std::size_t) { return false; }, 3)), (std::vector<std::string>{"0", "00", "000"}));
  EXPECT_EQ(bits(end_path([](std::size_t i) { return i % 2 == 1; }, 3)), (std::vector<std::string>{"0", "01", "010"}));
  Gen gen(61);
  std::vector<bool> stream(40);
  for (std::size_t i = 0; i < stream.size(); ++i) stream[i] = gen.coin();
  const auto path = end_path([&](std::size_t i) { return static_cast<bool>(stream[i]); }, 40);
  for (std::size_t i = 1; i < path.size(); ++i) EXPECT_TRUE(path[i - 1].is_prefix_of(path[i]));
}

TEST(EndGenus, Flags) {
  EXPECT_EQ(end_genus_flags(Kind::cantor, EndCode("0110")), EndGenus::planar);
  EXPECT_EQ(end_genus_flags(Kind::blooming, EndCode("0110")), EndGenus::infinite_genus);
  EXPECT_EQ(end_genus_flags(Kind::loch_ness, EndCode("")), EndGenus::infinite_genus);
  EXPECT_EQ(to_string(EndGenus::planar), "planar");
}
