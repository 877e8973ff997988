#include "fuchsian/schottky.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <sstream>

namespace fuchsian {

std::string to_string(InvalidDescription::Reason reason) {
  switch (reason) {
    case InvalidDescription::Reason::zero_index: return "zero-index";
    case InvalidDescription::Reason::duplicate_index: return "duplicate-index";
    case InvalidDescription::Reason::non_symmetric_index: return "non-symmetric-index";
    case InvalidDescription::Reason::inverse_mismatch: return "inverse-mismatch";
    case InvalidDescription::Reason::interval_mismatch: return "interval-mismatch";
  }
  return "unknown";
}

namespace {

// +1, -1, +2, -2, ...
bool canonical_less(int x, int y) {
  const int ax = std::abs(x);
  const int ay = std::abs(y);
  if (ax != ay) return ax < ay;
  return x > y;
}

}  // namespace

SchottkyDescription SchottkyDescription::from_entries(std::vector<SchottkyEntry> entries) {
  using Reason = InvalidDescription::Reason;
  std::map<int, std::size_t> by_index;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const int k = entries[i].index;
    if (k == 0) throw InvalidDescription(Reason::zero_index, 0, "entry " + std::to_string(i) + " has index 0");
    if (!by_index.emplace(k, i).second) {
      throw InvalidDescription(Reason::duplicate_index, k, "index " + std::to_string(k) + " appears twice");
    }
  }
  for (const auto& [k, i] : by_index) {
    if (!by_index.contains(-k)) {
      throw InvalidDescription(Reason::non_symmetric_index, k,
                               "index " + std::to_string(k) + " has no partner " + std::to_string(-k));
    }
  }
  for (const auto& [k, i] : by_index) {
    const SchottkyEntry& e = entries[i];
    if (!(e.lo < e.hi)) {
      throw InvalidDescription(Reason::interval_mismatch, k, "index " + std::to_string(k) + " has an empty interval");
    }
    HalfCircle expected(0, 1);
    try {
      expected = isometric_circle(e.transform);
    } catch (const std::domain_error& err) {
      throw InvalidDescription(Reason::interval_mismatch, k, "index " + std::to_string(k) + ": " + err.what());
    }
    if (expected.left() != e.lo || expected.right() != e.hi) {
      throw InvalidDescription(Reason::interval_mismatch, k,
                               "index " + std::to_string(k) + " interval [" + e.lo.to_string() + ", " +
                                   e.hi.to_string() + "] differs from its isometric circle endpoints [" +
                                   expected.left().to_string() + ", " + expected.right().to_string() + "]");
    }
    if (k > 0) {
      const SchottkyEntry& partner = entries[by_index.at(-k)];
      if (!partner.transform.projectively_equal(inverse(e.transform))) {
        throw InvalidDescription(Reason::inverse_mismatch, k,
                                 "index " + std::to_string(-k) + " is not the inverse of index " + std::to_string(k));
      }
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const SchottkyEntry& x, const SchottkyEntry& y) { return canonical_less(x.index, y.index); });
  SchottkyDescription desc;
  desc.entries_ = std::move(entries);
  return desc;
}

std::size_t SchottkyDescription::position(int index) const {
  // Canonical order places +k at 2(k-1) and -k at 2(k-1)+1 when indices are
  // contiguous; fall back to a search otherwise.
  if (index != 0) {
    const std::size_t guess = 2 * static_cast<std::size_t>(std::abs(index) - 1) + (index < 0 ? 1 : 0);
    if (guess < entries_.size() && entries_[guess].index == index) return guess;
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].index == index) return i;
  }
  throw std::out_of_range("no entry with index " + std::to_string(index));
}

const SchottkyEntry& SchottkyDescription::entry(int index) const { return entries_[position(index)]; }

std::vector<HalfCircle> SchottkyDescription::circles() const {
  std::vector<HalfCircle> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.circle());
  return out;
}

SchottkyDescription describe(std::span<const GeneratorSpec> generators) {
  std::vector<SchottkyEntry> entries;
  entries.reserve(2 * generators.size());
  int next = 1;
  for (const GeneratorSpec& g : generators) {
    GeneratorId inverse_id = g.id;
    inverse_id.sign = -g.id.sign;
    entries.push_back(SchottkyEntry{next, g.transform, g.circle.left(), g.circle.right(), g.id});
    entries.push_back(
        SchottkyEntry{-next, inverse(g.transform), g.partner_circle.left(), g.partner_circle.right(), inverse_id});
    ++next;
  }
  return SchottkyDescription::from_entries(std::move(entries));
}

VerificationReport verify(const SchottkyDescription& desc) {
  VerificationReport report;
  const auto entries = desc.entries();

  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) {
      const SchottkyEntry& x = entries[i];
      const SchottkyEntry& y = entries[j];
      if (x.hi < y.lo || y.hi < x.lo) continue;
      const IndexPair pair{x.index, y.index};
      if (x.hi == y.lo || y.hi == x.lo) {
        report.tangent_pairs.push_back(pair);
      } else {
        report.overlap_pairs.push_back(pair);
      }
      if (report.cond1_disjoint_closures.pass) {
        report.cond1_disjoint_closures.pass = false;
        report.cond1_disjoint_closures.witness_pair = pair;
      }
    }
  }

  // Bounded real intervals never contain a closed half-circle.
  report.cond2_no_full_halfcircle.pass = true;

  for (const SchottkyEntry& e : entries) {
    bool ok = false;
    try {
      const HalfCircle circle = isometric_circle(e.transform);
      ok = circle.left() == e.lo && circle.right() == e.hi && circle_pairing_check(e.transform) &&
           desc.entry(-e.index).transform.projectively_equal(inverse(e.transform));
    } catch (const std::exception&) {
      ok = false;
    }
    if (!ok) {
      report.cond3_isometric_match.pass = false;
      report.cond3_isometric_match.witness_index = e.index;
      break;
    }
  }

  for (const SchottkyEntry& e : entries) {
    if (classify(e.transform) != MobiusClass::hyperbolic) {
      report.cond4_hyperbolic.pass = false;
      report.cond4_hyperbolic.witness_index = e.index;
      break;
    }
  }

  if (!entries.empty()) {
    const auto circles = desc.circles();
    const auto separation = separation_epsilon(circles);
    if (const auto* eps = std::get_if<Rational>(&separation)) {
      report.epsilon = *eps;
    } else {
      const auto& w = std::get<SeparationWitness>(separation);
      report.cond5_separation.pass = false;
      report.cond5_separation.witness_pair = IndexPair{entries[w.first].index, entries[w.second].index};
    }
  }
  return report;
}

bool in_fundamental_domain(const SchottkyDescription& desc, const UpperPoint& z) {
  return std::all_of(desc.entries().begin(), desc.entries().end(),
                     [&](const SchottkyEntry& e) { return outside_closed(e.circle(), z); });
}

ReducedWord::ReducedWord(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (letters_[i] == 0) throw std::invalid_argument("word letter 0");
    if (i > 0 && letters_[i] == -letters_[i - 1]) {
      throw std::invalid_argument("word is not freely reduced at position " + std::to_string(i));
    }
  }
}

ReducedWord ReducedWord::inverse() const {
  std::vector<int> out(letters_.rbegin(), letters_.rend());
  for (int& k : out) k = -k;
  return ReducedWord(std::move(out));
}

std::string to_string(const ReducedWord& word) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < word.size(); ++i) os << (i ? "," : "") << word.letters()[i];
  os << ']';
  return os.str();
}

UpperPoint apply_word(const SchottkyDescription& desc, const ReducedWord& word, const UpperPoint& z) {
  UpperPoint current = z;
  for (int k : word.letters()) current = apply(desc.entry(k).transform, current);
  return current;
}

MobiusMatrix word_matrix(const SchottkyDescription& desc, const ReducedWord& word) {
  MobiusMatrix acc = MobiusMatrix::identity();
  for (int k : word.letters()) acc = compose(desc.entry(k).transform, acc);
  return acc;
}

Reduction reduce(const SchottkyDescription& desc, const UpperPoint& z, std::size_t max_steps) {
  UpperPoint current = z;
  std::vector<int> letters;
  const auto entries = desc.entries();
  for (std::size_t step = 0;; ++step) {
    const auto hit = std::find_if(entries.begin(), entries.end(),
                                  [&](const SchottkyEntry& e) { return inside_strict(e.circle(), current); });
    if (hit == entries.end()) return Reduction{current, ReducedWord(std::move(letters)).inverse(), true};
    if (step == max_steps) return Reduction{current, ReducedWord(std::move(letters)).inverse(), false};
    current = apply(hit->transform, current);
    letters.push_back(hit->index);
  }
}

std::vector<ReducedWord> reduced_words(const SchottkyDescription& desc, std::size_t max_len) {
  std::vector<int> alphabet;
  for (const auto& e : desc.entries()) alphabet.push_back(e.index);
  std::sort(alphabet.begin(), alphabet.end(), canonical_less);

  std::vector<ReducedWord> out{ReducedWord()};
  std::vector<std::vector<int>> frontier{{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& prefix : frontier) {
      for (int k : alphabet) {
        if (!prefix.empty() && prefix.back() == -k) continue;
        auto word = prefix;
        word.push_back(k);
        out.emplace_back(word);
        next.push_back(std::move(word));
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::vector<Tile> tessellation_tiles(const SchottkyDescription& desc, std::size_t max_len) {
  const auto circles = desc.circles();
  std::vector<Tile> tiles;
  for (ReducedWord& word : reduced_words(desc, max_len)) {
    const MobiusMatrix g = word_matrix(desc, word);
    std::vector<Geodesic> boundary;
    boundary.reserve(circles.size());
    for (const HalfCircle& c : circles) boundary.push_back(image_of(g, c));
    tiles.push_back(Tile{std::move(word), std::move(boundary)});
  }
  return tiles;
}

}  // namespace fuchsian
