#include "fuchsian/topology.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "fuchsian/cantor.hpp"

namespace fuchsian {

namespace {

using FlagKey = std::pair<int, int>;

FlagKey key(const EndpointFlag& flag) { return {flag.index, flag.side == Side::left ? 0 : 1}; }

const EndpointFlag& other_flag(const BoundaryArc& arc, const EndpointFlag& flag) {
  return arc.from == flag ? arc.to : arc.from;
}

}  // namespace

BoundaryCycles boundary_cycles(const SchottkyDescription& desc) {
  BoundaryCycles result;
  const auto entries = desc.entries();
  if (entries.empty()) return result;

  std::vector<const SchottkyEntry*> sorted;
  for (const auto& e : entries) sorted.push_back(&e);
  std::sort(sorted.begin(), sorted.end(), [](const SchottkyEntry* x, const SchottkyEntry* y) {
    return x->lo != y->lo ? x->lo < y->lo : x->hi < y->hi;
  });
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i]->hi > sorted[i + 1]->lo) {
      throw TopologyError("circles " + std::to_string(sorted[i]->index) + " and " +
                          std::to_string(sorted[i + 1]->index) + " overlap");
    }
  }

  const std::size_t n = sorted.size();
  std::map<FlagKey, std::size_t> arc_of;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t next = (i + 1) % n;
    BoundaryArc arc{{sorted[i]->index, Side::right}, {sorted[next]->index, Side::left}};
    arc.through_infinity = next == 0;
    arc.degenerate = !arc.through_infinity && sorted[i]->hi == sorted[next]->lo;
    arc_of[key(arc.from)] = i;
    arc_of[key(arc.to)] = i;
    result.arcs.push_back(arc);
  }

  std::map<FlagKey, EndpointFlag> partner;
  for (const auto& e : entries) {
    if (e.index < 0) continue;
    const SchottkyEntry& target = desc.entry(-e.index);
    for (Side side : {Side::left, Side::right}) {
      const Rational& p = side == Side::left ? e.lo : e.hi;
      const ExtendedReal image = apply_boundary(e.transform, p);
      EndpointFlag to{-e.index, Side::left};
      if (image == ExtendedReal(target.lo)) {
        to.side = Side::left;
      } else if (image == ExtendedReal(target.hi)) {
        to.side = Side::right;
      } else {
        throw TopologyError("generator " + std::to_string(e.index) + " sends endpoint " + p.to_string() + " to " +
                            image.to_string() + ", not an endpoint of circle " + std::to_string(-e.index));
      }
      const EndpointFlag from{e.index, side};
      partner.emplace(key(from), to);
      partner.emplace(key(to), from);
    }
  }

  std::vector<bool> visited(n, false);
  for (std::size_t start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<std::size_t> cycle;
    std::size_t current = start;
    EndpointFlag exit = result.arcs[start].to;
    do {
      cycle.push_back(current);
      visited[current] = true;
      const EndpointFlag entry = partner.at(key(exit));
      current = arc_of.at(key(entry));
      exit = other_flag(result.arcs[current], entry);
    } while (!(current == start && exit == result.arcs[start].to));
    result.cycles.push_back(std::move(cycle));
  }
  return result;
}

SurfaceSignature signature(const SchottkyDescription& desc) {
  const std::size_t m = desc.pair_count();
  const std::size_t b = boundary_cycles(desc).count();
  const long twice_genus = 1 + static_cast<long>(m) - static_cast<long>(b);
  if (twice_genus < 0 || twice_genus % 2 != 0) {
    throw TopologyError("inconsistent topology: m = " + std::to_string(m) + ", b = " + std::to_string(b) +
                        " gives genus " + std::to_string(twice_genus) + "/2");
  }
  return SurfaceSignature{m, b, static_cast<std::size_t>(twice_genus / 2), 1 - static_cast<long>(m)};
}

std::string to_string(const SurfaceSignature& sig) {
  std::ostringstream os;
  os << "m=" << sig.rank << " b=" << sig.boundary_cycles << " genus=" << sig.genus << " chi=" << sig.euler;
  return os.str();
}

EndCode::EndCode(std::string bits) : bits_(std::move(bits)) {
  if (bits_.find_first_not_of("01") != std::string::npos) {
    throw std::invalid_argument("end code must be binary: '" + bits_ + "'");
  }
}

bool EndCode::is_prefix_of(const EndCode& other) const {
  return bits_.size() <= other.bits_.size() && other.bits_.compare(0, bits_.size(), bits_) == 0;
}

ExhaustionBox ExhaustionBox::at(Kind kind, unsigned level) {
  const Rational half_width(static_cast<long>(level) + 1);
  return ExhaustionBox{level, -half_width, half_width, core_radius(kind, level), Rational(static_cast<long>(level))};
}

bool ExhaustionBox::contains(const UpperPoint& z) const {
  return re_min <= z.re && z.re <= re_max && im_min <= z.im && z.im <= im_max;
}

ComponentCode component_code(const UpperPoint& z, unsigned n, Kind kind) {
  if (n == 0) throw std::invalid_argument("component_code needs level >= 1");
  if (ExhaustionBox::at(kind, n).contains(z)) return ComponentCode{ComponentCode::Where::core, std::nullopt};
  auto bits = cantor::address(z.re.abs(), n);
  if (!bits) return ComponentCode{ComponentCode::Where::gap, std::nullopt};
  return ComponentCode{ComponentCode::Where::end, EndCode(std::move(*bits))};
}

std::vector<EndCode> end_path(const std::function<bool(std::size_t)>& bit, std::size_t depth) {
  std::vector<EndCode> path;
  std::string prefix;
  for (std::size_t i = 0; i < depth; ++i) {
    prefix.push_back(bit(i) ? '1' : '0');
    path.emplace_back(prefix);
  }
  return path;
}

std::string to_string(EndGenus genus) { return genus == EndGenus::planar ? "planar" : "infinite-genus"; }

EndGenus end_genus_flags(Kind kind, const EndCode&) {
  return kind == Kind::cantor ? EndGenus::planar : EndGenus::infinite_genus;
}

}  // namespace fuchsian
