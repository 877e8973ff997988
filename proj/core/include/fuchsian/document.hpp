#pragma once

/**
 * @file document.hpp
 * @brief GroupDocument: the JSON interchange format for descriptions.
 *
 * Layout (format_version 1):
 *
 *     {
 *       "format_version": 1,
 *       "kind": {"family": "cantor", "level": 3, "depth": 0}   // or "custom"
 *       "entries": [
 *         {
 *           "index": 1,
 *           "id": {"family": "cantor", "n": 1, "j": 0, "s": 0, "m": 0},   // optional
 *           "matrix": ["-18", "323/12", "12", "-18"],
 *           "interval": ["17/12", "19/12"],
 *           "inverse": {"index": -1, "matrix": [...], "interval": [...]}
 *         }
 *       ]
 *     }
 *
 * Each entry carries one generator together with its inverse. Every rational
 * is a "p/q" (or integer) string; JSON numbers are used only for integers.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fuchsian/families.hpp"
#include "fuchsian/schottky.hpp"

namespace fuchsian {

constexpr int kFormatVersion = 1;

struct Truncation {
  Kind kind;
  unsigned level;
  unsigned depth;
  friend bool operator==(const Truncation&, const Truncation&) = default;
};

struct GroupDocument {
  int format_version = kFormatVersion;
  std::optional<Truncation> truncation;  // std::nullopt for "custom"
  SchottkyDescription description;
  friend bool operator==(const GroupDocument&, const GroupDocument&) = default;
};

class DocumentError : public std::runtime_error {
 public:
  enum class Reason {
    parse,
    schema,
    unsupported_version,
    bad_rational,
    non_positive_determinant,
    zero_index,
    duplicate_index,
    non_symmetric_index,
    inverse_mismatch,
    interval_mismatch,
  };

  DocumentError(Reason reason, std::string location, const std::string& what)
      : std::runtime_error(location.empty() ? what : location + ": " + what),
        reason_(reason),
        location_(std::move(location)) {}

  Reason reason() const { return reason_; }
  /// "line:column" for parse errors, a field path such as
  /// "entries[2].matrix" otherwise.
  const std::string& location() const { return location_; }

 private:
  Reason reason_;
  std::string location_;
};

std::string to_string(DocumentError::Reason reason);

GroupDocument make_document(Kind kind, unsigned level, unsigned depth = 0);

/// Deterministic, pretty-printed JSON with a trailing newline.
std::string save(const GroupDocument& doc);
std::string save(const SchottkyDescription& desc);

/// Parses and re-validates every invariant. Throws DocumentError.
GroupDocument load_document(std::string_view text);
SchottkyDescription load(std::string_view text);

}  // namespace fuchsian
