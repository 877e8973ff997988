#pragma once

// Deliberately corrupted GroupDocuments, each with the rejection it must
// produce. All are mutations of the cantor level-2 document.

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

#include <fuchsian/document.hpp>

namespace fuchsian::testing {

struct CorruptDocument {
  std::string name;
  std::string text;
  DocumentError::Reason reason;
  std::string location;
};

inline std::vector<CorruptDocument> corruption_corpus() {
  using json = nlohmann::json;
  using R = DocumentError::Reason;
  const std::string base_text = save(make_document(Kind::cantor, 2));
  const json base = json::parse(base_text);
  std::vector<CorruptDocument> out;
  auto add = [&](std::string name, auto mutate, R reason, std::string location) {
    json doc = base;
    mutate(doc);
    out.push_back({std::move(name), doc.dump(2), reason, std::move(location)});
  };

  add("inverse labelled with the wrong index", [](json& d) { d["entries"][0]["inverse"]["index"] = -2; },
      R::non_symmetric_index, "$.entries[0].inverse.index");
  add("zero index", [](json& d) { d["entries"][1]["index"] = 0; }, R::zero_index, "$.entries[1].index");
  add(
      "duplicate index",
      [](json& d) {
        d["entries"][2]["index"] = 1;
        d["entries"][2]["inverse"]["index"] = -1;
      },
      R::duplicate_index, "$.entries[2]");
  add("zero determinant", [](json& d) { d["entries"][0]["matrix"] = json::array({"1", "1", "1", "1"}); },
      R::non_positive_determinant, "$.entries[0].matrix");
  add("negative determinant", [](json& d) { d["entries"][1]["matrix"][3] = "42"; }, R::non_positive_determinant,
      "$.entries[1].matrix");
  add(
      "negative determinant on an inverse",
      [](json& d) { d["entries"][2]["inverse"]["matrix"] = json::array({"0", "1", "1", "0"}); },
      R::non_positive_determinant, "$.entries[2].inverse.matrix");
  add("interval off its circle", [](json& d) { d["entries"][0]["interval"][1] = "5/3"; }, R::interval_mismatch,
      "$.entries[0].interval");
  add(
      "inverse interval off its circle",
      [](json& d) { d["entries"][1]["inverse"]["interval"] = json::array({"-11/9", "-7/6"}); },
      R::interval_mismatch, "$.entries[1].inverse.interval");
  add(
      "inverse slot holds the generator itself",
      [](json& d) {
        d["entries"][2]["inverse"]["matrix"] = d["entries"][2]["matrix"];
        d["entries"][2]["inverse"]["interval"] = d["entries"][2]["interval"];
      },
      R::inverse_mismatch, "$.entries[2]");

  // Syntax error: a doubled comma after the first index.
  std::string broken = base_text;
  const std::string needle = "\"index\": 1,";
  const auto at = broken.find(needle);
  broken.insert(at + needle.size(), ",");
  const std::size_t line = 1 + static_cast<std::size_t>(std::count(broken.begin(), broken.begin() + at, '\n'));
  const std::size_t line_start = broken.rfind('\n', at) + 1;
  const std::size_t column = at + needle.size() - line_start + 1;
  out.push_back({"doubled comma", broken, R::parse, std::to_string(line) + ":" + std::to_string(column)});
  return out;
}

}  // namespace fuchsian::testing
