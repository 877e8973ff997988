#include "fuchsian/document.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include <json.hpp>

namespace fuchsian {

using json = nlohmann::json;
using Reason = DocumentError::Reason;

std::string to_string(DocumentError::Reason reason) {
  switch (reason) {
    case Reason::parse: return "parse";
    case Reason::schema: return "schema";
    case Reason::unsupported_version: return "unsupported-version";
    case Reason::bad_rational: return "bad-rational";
    case Reason::non_positive_determinant: return "non-positive-determinant";
    case Reason::zero_index: return "zero-index";
    case Reason::duplicate_index: return "duplicate-index";
    case Reason::non_symmetric_index: return "non-symmetric-index";
    case Reason::inverse_mismatch: return "inverse-mismatch";
    case Reason::interval_mismatch: return "interval-mismatch";
  }
  return "unknown";
}

GroupDocument make_document(Kind kind, unsigned level, unsigned depth) {
  const auto generators = truncate(kind, level, depth);
  return GroupDocument{kFormatVersion, Truncation{kind, level, kind == Kind::blooming ? depth : 0},
                       describe(generators)};
}

namespace {

json matrix_json(const MobiusMatrix& m) {
  return json::array({m.a().to_string(), m.b().to_string(), m.c().to_string(), m.d().to_string()});
}

json interval_json(const SchottkyEntry& e) { return json::array({e.lo.to_string(), e.hi.to_string()}); }

json id_json(const GeneratorId& id) {
  return json{{"family", to_string(id.family)}, {"n", id.n}, {"j", id.j}, {"s", id.s}, {"m", id.m}};
}

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < std::min(byte, text.size()); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return std::to_string(line) + ":" + std::to_string(column);
}

const json& field(const json& object, const char* name, const std::string& path) {
  if (!object.is_object()) throw DocumentError(Reason::schema, path, "expected an object");
  auto it = object.find(name);
  if (it == object.end()) throw DocumentError(Reason::schema, path + "." + name, "missing field");
  return *it;
}

long long integer_field(const json& object, const char* name, const std::string& path) {
  const json& value = field(object, name, path);
  if (!value.is_number_integer()) throw DocumentError(Reason::schema, path + "." + name, "expected an integer");
  return value.get<long long>();
}

Rational rational_at(const json& value, const std::string& path) {
  if (!value.is_string()) throw DocumentError(Reason::schema, path, "rationals must be strings");
  try {
    return Rational::parse(value.get<std::string>());
  } catch (const std::exception& err) {
    throw DocumentError(Reason::bad_rational, path, err.what());
  }
}

std::vector<Rational> rational_array(const json& object, const char* name, std::size_t count,
                                     const std::string& path) {
  const json& value = field(object, name, path);
  const std::string here = path + "." + name;
  if (!value.is_array() || value.size() != count) {
    throw DocumentError(Reason::schema, here, "expected an array of " + std::to_string(count) + " strings");
  }
  std::vector<Rational> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(rational_at(value[i], here + "[" + std::to_string(i) + "]"));
  return out;
}

SchottkyEntry read_entry(const json& object, const std::string& path) {
  SchottkyEntry entry;
  const long long index = integer_field(object, "index", path);
  if (index < std::numeric_limits<int>::min() || index > std::numeric_limits<int>::max()) {
    throw DocumentError(Reason::schema, path + ".index", "index out of range");
  }
  entry.index = static_cast<int>(index);
  const auto m = rational_array(object, "matrix", 4, path);
  try {
    entry.transform = MobiusMatrix(m[0], m[1], m[2], m[3]);
  } catch (const std::domain_error& err) {
    throw DocumentError(Reason::non_positive_determinant, path + ".matrix", err.what());
  }
  const auto interval = rational_array(object, "interval", 2, path);
  entry.lo = interval[0];
  entry.hi = interval[1];
  return entry;
}

GeneratorId read_id(const json& object, const std::string& path) {
  GeneratorId id;
  const json& family = field(object, "family", path);
  if (!family.is_string()) throw DocumentError(Reason::schema, path + ".family", "expected a string");
  try {
    id.family = family_from_string(family.get<std::string>());
  } catch (const std::invalid_argument& err) {
    throw DocumentError(Reason::schema, path + ".family", err.what());
  }
  id.n = integer_field(object, "n", path);
  const long long j = integer_field(object, "j", path);
  const long long s = integer_field(object, "s", path);
  const long long m = integer_field(object, "m", path);
  if (j < 0 || m < 0 || s < 0 || s > 4) throw DocumentError(Reason::schema, path, "id field out of range");
  id.j = static_cast<std::uint64_t>(j);
  id.s = static_cast<int>(s);
  id.m = static_cast<unsigned>(m);
  return id;
}

Reason reason_of(InvalidDescription::Reason reason) {
  switch (reason) {
    case InvalidDescription::Reason::zero_index: return Reason::zero_index;
    case InvalidDescription::Reason::duplicate_index: return Reason::duplicate_index;
    case InvalidDescription::Reason::non_symmetric_index: return Reason::non_symmetric_index;
    case InvalidDescription::Reason::inverse_mismatch: return Reason::inverse_mismatch;
    case InvalidDescription::Reason::interval_mismatch: return Reason::interval_mismatch;
  }
  return Reason::schema;
}

}  // namespace

std::string save(const GroupDocument& doc) {
  json out;
  out["format_version"] = doc.format_version;
  if (doc.truncation) {
    out["kind"] = json{{"family", to_string(doc.truncation->kind)},
                       {"level", doc.truncation->level},
                       {"depth", doc.truncation->depth}};
  } else {
    out["kind"] = "custom";
  }
  json entries = json::array();
  for (const SchottkyEntry& e : doc.description.entries()) {
    if (e.index < 0) continue;
    const SchottkyEntry& inv = doc.description.entry(-e.index);
    json item{{"index", e.index}, {"matrix", matrix_json(e.transform)}, {"interval", interval_json(e)}};
    if (e.id) item["id"] = id_json(*e.id);
    item["inverse"] =
        json{{"index", inv.index}, {"matrix", matrix_json(inv.transform)}, {"interval", interval_json(inv)}};
    entries.push_back(std::move(item));
  }
  out["entries"] = std::move(entries);
  return out.dump(2) + "\n";
}

std::string save(const SchottkyDescription& desc) { return save(GroupDocument{kFormatVersion, std::nullopt, desc}); }

GroupDocument load_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& err) {
    throw DocumentError(Reason::parse, line_column(text, err.byte == 0 ? 0 : err.byte - 1), err.what());
  }

  GroupDocument doc;
  const long long version = integer_field(root, "format_version", "$");
  if (version != kFormatVersion) {
    throw DocumentError(Reason::unsupported_version, "$.format_version",
                        "unsupported format_version " + std::to_string(version));
  }
  doc.format_version = static_cast<int>(version);

  const json& kind = field(root, "kind", "$");
  if (kind.is_string() && kind.get<std::string>() == "custom") {
    doc.truncation.reset();
  } else if (kind.is_object()) {
    const json& family = field(kind, "family", "$.kind");
    if (!family.is_string()) throw DocumentError(Reason::schema, "$.kind.family", "expected a string");
    Truncation t{};
    try {
      t.kind = kind_from_string(family.get<std::string>());
    } catch (const std::invalid_argument& err) {
      throw DocumentError(Reason::schema, "$.kind.family", err.what());
    }
    const long long level = integer_field(kind, "level", "$.kind");
    const long long depth = integer_field(kind, "depth", "$.kind");
    if (level < 0 || depth < 0) throw DocumentError(Reason::schema, "$.kind", "level and depth must be >= 0");
    t.level = static_cast<unsigned>(level);
    t.depth = static_cast<unsigned>(depth);
    doc.truncation = t;
  } else {
    throw DocumentError(Reason::schema, "$.kind", "expected \"custom\" or a truncation object");
  }

  const json& items = field(root, "entries", "$");
  if (!items.is_array()) throw DocumentError(Reason::schema, "$.entries", "expected an array");
  std::vector<SchottkyEntry> entries;
  std::map<int, std::string> where;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string path = "$.entries[" + std::to_string(i) + "]";
    SchottkyEntry forward = read_entry(items[i], path);
    if (forward.index <= 0) {
      throw DocumentError(forward.index == 0 ? Reason::zero_index : Reason::schema, path + ".index",
                          "generator entries carry positive indices");
    }
    SchottkyEntry backward = read_entry(field(items[i], "inverse", path), path + ".inverse");
    if (backward.index != -forward.index) {
      throw DocumentError(Reason::non_symmetric_index, path + ".inverse.index",
                          "inverse of index " + std::to_string(forward.index) + " is labelled " +
                              std::to_string(backward.index));
    }
    if (items[i].contains("id")) {
      forward.id = read_id(items[i]["id"], path + ".id");
      backward.id = forward.id;
      backward.id->sign = -forward.id->sign;
    }
    where[forward.index] = path;
    where[backward.index] = path + ".inverse";
    entries.push_back(std::move(forward));
    entries.push_back(std::move(backward));
  }

  try {
    doc.description = SchottkyDescription::from_entries(std::move(entries));
  } catch (const InvalidDescription& err) {
    const auto it = where.find(err.index());
    std::string location = it == where.end() ? "$.entries" : it->second;
    if (err.reason() == InvalidDescription::Reason::interval_mismatch) location += ".interval";
    throw DocumentError(reason_of(err.reason()), location, err.what());
  }
  return doc;
}

SchottkyDescription load(std::string_view text) { return load_document(text).description; }

}  // namespace fuchsian
