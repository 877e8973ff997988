#include <gtest/gtest.h>

#include <json.hpp>

#include <fuchsian/document.hpp>

#include "corpus.hpp"
#include "support.hpp"

using namespace fuchsian;
using json = nlohmann::json;
using Reason = DocumentError::Reason;

namespace {

DocumentError load_error(const std::string& text) {
  try {
    load_document(text);
  } catch (const DocumentError& err) {
    return err;
  }
  ADD_FAILURE() << "document was accepted";
  return DocumentError(Reason::schema, "", "accepted");
}

std::string cantor2() { return save(make_document(Kind::cantor, 2)); }

}  // namespace

TEST(Document, RoundTripAcrossTruncations) {
  struct Case {
    Kind kind;
    unsigned level, depth;
  };
  const std::vector<Case> cases{{Kind::loch_ness, 0, 0}, {Kind::loch_ness, 4, 0}, {Kind::cantor, 1, 0},
                                {Kind::cantor, 5, 0},    {Kind::blooming, 1, 0}, {Kind::blooming, 2, 3},
                                {Kind::blooming, 3, 2}};
  for (const auto& c : cases) {
    const auto doc = make_document(c.kind, c.level, c.depth);
    const auto text = save(doc);
    const auto back = load_document(text);
    EXPECT_EQ(back, doc);
    EXPECT_EQ(save(back), text);
    EXPECT_EQ(load(save(doc.description)), doc.description);
  }
}

TEST(Document, CantorOneEntry) {
  const json doc = json::parse(save(make_document(Kind::cantor, 1)));
  EXPECT_EQ(doc["format_version"], 1);
  EXPECT_EQ(doc["kind"]["family"], "cantor");
  ASSERT_EQ(doc["entries"].size(), 1u);
  const auto& e = doc["entries"][0];
  EXPECT_EQ(e["index"], 1);
  EXPECT_EQ(e["matrix"], json::array({"-18", "323/12", "12", "-18"}));
  EXPECT_EQ(e["interval"], json::array({"17/12", "19/12"}));
  EXPECT_EQ(e["inverse"]["index"], -1);
  EXPECT_EQ(e["inverse"]["interval"], json::array({"-19/12", "-17/12"}));
}

TEST(Document, RationalsAreNeverJsonNumbers) {
  const json doc = json::parse(save(make_document(Kind::blooming, 2, 2)));
  for (const auto& e : doc["entries"]) {
    for (const auto* key : {"matrix", "interval"}) {
      for (const auto& x : e[key]) EXPECT_TRUE(x.is_string());
      for (const auto& x : e["inverse"][key]) EXPECT_TRUE(x.is_string());
    }
  }
}

TEST(Document, SaveIsDeterministic) {
  EXPECT_EQ(save(make_document(Kind::blooming, 2, 3)), save(make_document(Kind::blooming, 2, 3)));
  const auto text = cantor2();
  EXPECT_EQ(text.back(), '\n');
}

TEST(Document, CorruptionCorpus) {
  const auto corpus = fuchsian::testing::corruption_corpus();
  ASSERT_EQ(corpus.size(), 10u);
  for (const auto& c : corpus) {
    const auto err = load_error(c.text);
    EXPECT_EQ(to_string(err.reason()), to_string(c.reason)) << c.name << ": " << err.what();
    EXPECT_EQ(err.location(), c.location) << c.name << ": " << err.what();
  }
}

TEST(Document, UnsupportedVersion) {
  json doc = json::parse(cantor2());
  doc["format_version"] = 2;
  const auto err = load_error(doc.dump());
  EXPECT_EQ(err.reason(), Reason::unsupported_version);
  EXPECT_EQ(err.location(), "$.format_version");
}

TEST(Document, BadRational) {
  json doc = json::parse(cantor2());
  doc["entries"][0]["matrix"][1] = "1/0";
  EXPECT_EQ(load_error(doc.dump()).reason(), Reason::bad_rational);
  doc["entries"][0]["matrix"][1] = "x";
  EXPECT_EQ(load_error(doc.dump()).reason(), Reason::bad_rational);
}

TEST(Document, SchemaErrors) {
  json doc = json::parse(cantor2());
  doc["entries"][0]["matrix"][1] = 3;
  EXPECT_EQ(load_error(doc.dump()).reason(), Reason::schema);

  doc = json::parse(cantor2());
  doc["entries"][0].erase("inverse");
  EXPECT_EQ(load_error(doc.dump()).reason(), Reason::schema);

  doc = json::parse(cantor2());
  doc["entries"] = json::object();
  EXPECT_EQ(load_error(doc.dump()).location(), "$.entries");

  doc = json::parse(cantor2());
  doc["entries"][1]["index"] = -5;
  EXPECT_EQ(load_error(doc.dump()).reason(), Reason::schema);

  EXPECT_EQ(load_error("[]").reason(), Reason::schema);
  EXPECT_EQ(load_error("").reason(), Reason::parse);
}

TEST(Document, CustomKindRoundTrips) {
  const auto desc = describe(std::vector<GeneratorSpec>{cantor_pair(1, 0), cantor_pair(3, 2)});
  const auto text = save(desc);
  EXPECT_EQ(json::parse(text)["kind"], "custom");
  const auto back = load_document(text);
  EXPECT_FALSE(back.truncation.has_value());
  EXPECT_EQ(back.description, desc);
}
