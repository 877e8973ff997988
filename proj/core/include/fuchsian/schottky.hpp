#pragma once

/**
 * @file schottky.hpp
 * @brief Schottky descriptions, their verification, and the standard
 * fundamental domain.
 *
 * A description is a finite symmetric family of (interval, transformation)
 * entries indexed by nonzero integers: entry -k carries the inverse of entry
 * k, and each interval spans the endpoints of its transformation's isometric
 * circle. The standard fundamental domain is the closed region outside every
 * such circle.
 */

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fuchsian/families.hpp"
#include "fuchsian/hyperbolic.hpp"

namespace fuchsian {

struct SchottkyEntry {
  int index = 0;
  MobiusMatrix transform = MobiusMatrix::identity();
  Rational lo;
  Rational hi;
  std::optional<GeneratorId> id;

  HalfCircle circle() const { return HalfCircle::from_endpoints(lo, hi); }

  friend bool operator==(const SchottkyEntry&, const SchottkyEntry&) = default;
};

/// Thrown when entries violate the description invariants.
class InvalidDescription : public std::invalid_argument {
 public:
  enum class Reason { zero_index, duplicate_index, non_symmetric_index, inverse_mismatch, interval_mismatch };

  InvalidDescription(Reason reason, int index, const std::string& what)
      : std::invalid_argument(what), reason_(reason), index_(index) {}

  Reason reason() const { return reason_; }
  /// The offending entry index.
  int index() const { return index_; }

 private:
  Reason reason_;
  int index_;
};

std::string to_string(InvalidDescription::Reason reason);

class SchottkyDescription {
 public:
  SchottkyDescription() = default;

  /// Checks the invariants and stores entries ordered +1, -1, +2, -2, ...
  /// Throws InvalidDescription with the first offending index.
  static SchottkyDescription from_entries(std::vector<SchottkyEntry> entries);

  std::span<const SchottkyEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  std::size_t pair_count() const { return entries_.size() / 2; }
  bool empty() const { return entries_.empty(); }

  /// Throws std::out_of_range for an unknown index.
  const SchottkyEntry& entry(int index) const;
  std::size_t position(int index) const;

  std::vector<HalfCircle> circles() const;

  friend bool operator==(const SchottkyDescription&, const SchottkyDescription&) = default;

 private:
  std::vector<SchottkyEntry> entries_;
};

/// Generator at canonical position t gets index t+1 and its inverse -(t+1).
SchottkyDescription describe(std::span<const GeneratorSpec> generators);

struct IndexPair {
  int first;
  int second;
  friend bool operator==(const IndexPair&, const IndexPair&) = default;
};

struct VerificationReport {
  struct Condition {
    bool pass = true;
    std::optional<IndexPair> witness_pair;
    std::optional<int> witness_index;
  };

  Condition cond1_disjoint_closures;
  Condition cond2_no_full_halfcircle;
  Condition cond3_isometric_match;
  Condition cond4_hyperbolic;
  Condition cond5_separation;
  std::optional<Rational> epsilon;

  std::vector<IndexPair> tangent_pairs;
  std::vector<IndexPair> overlap_pairs;

  bool overall() const {
    return cond1_disjoint_closures.pass && cond2_no_full_halfcircle.pass && cond3_isometric_match.pass &&
           cond4_hyperbolic.pass && cond5_separation.pass;
  }
};

VerificationReport verify(const SchottkyDescription& desc);

/// z lies in the closed outside of every circle.
bool in_fundamental_domain(const SchottkyDescription& desc, const UpperPoint& z);

/// Freely reduced word over description indices.
class ReducedWord {
 public:
  ReducedWord() = default;
  /// Throws std::invalid_argument on a zero letter or an adjacent (k, -k).
  explicit ReducedWord(std::vector<int> letters);

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  ReducedWord inverse() const;

  friend bool operator==(const ReducedWord&, const ReducedWord&) = default;

 private:
  std::vector<int> letters_;
};

std::string to_string(const ReducedWord& word);

/// Letters applied left to right: the first letter acts first.
/// Throws std::out_of_range for letters outside the description.
UpperPoint apply_word(const SchottkyDescription& desc, const ReducedWord& word, const UpperPoint& z);
MobiusMatrix word_matrix(const SchottkyDescription& desc, const ReducedWord& word);

struct Reduction {
  UpperPoint point;
  ReducedWord word;
  bool converged;
};

constexpr std::size_t kDefaultMaxSteps = 64;

/// While z is strictly inside the circle of index k, replace z by f_k(z) and
/// record k. The returned word is the inverse of the record, so
/// apply_word(desc, word, point) == z and reduce(apply_word(w, z)) == (z, w)
/// for z in the domain. converged is false when max_steps are exhausted first.
Reduction reduce(const SchottkyDescription& desc, const UpperPoint& z, std::size_t max_steps = kDefaultMaxSteps);

/// Every freely reduced word of length <= max_len, in canonical order.
/// Letters are ordered +1, -1, +2, -2, ...
std::vector<ReducedWord> reduced_words(const SchottkyDescription& desc, std::size_t max_len);

struct Tile {
  ReducedWord word;
  std::vector<Geodesic> boundary;
};

/// For each reduced word w of length <= max_len, the images of the domain's
/// boundary circles under word_matrix(w).
std::vector<Tile> tessellation_tiles(const SchottkyDescription& desc, std::size_t max_len);

}  // namespace fuchsian
