#include "pgc/json_io.hpp"

#include "gtest/gtest.h"
#include "pgc/galois.hpp"
#include "pgc/random.hpp"

namespace pgc {
namespace {

Json ppp_json(int fill) {
  Json traits = Json::object();
  for (TraitId t : kAllTraits) traits[std::string(to_token(t))] = fill;
  return Json{{"type", "ppp"}, {"traits", traits}};
}

TEST(JsonIo, ParsesEachDocumentKind) {
  auto ppp = parse_document(ppp_json(5));
  ASSERT_TRUE(std::holds_alternative<CattellProfile>(ppp));
  EXPECT_EQ(std::get<CattellProfile>(ppp), CattellProfile::uniform(TraitValue(5)));

  auto spp = parse_document(std::string(
      R"({"type":"spp","factors":{"h":"+","s":"+","e":"-","hy":"-","k":"-","p":"-","d":"+","m":"+"}})"));
  ASSERT_TRUE(std::holds_alternative<SzondiProfile>(spp));

  auto set = parse_document(Json{{"type", "ppp_set"}, {"profiles", Json::array({ppp_json(1), ppp_json(2)["traits"]})}});
  ASSERT_TRUE(std::holds_alternative<PppSet>(set));
  EXPECT_EQ(std::get<PppSet>(set).profiles.size(), 2u);
  EXPECT_EQ(std::get<PppSet>(set).profiles[1], CattellProfile::uniform(TraitValue(2)));

  auto empty = parse_document(std::string(R"({"type":"spp_set","profiles":[]})"));
  EXPECT_TRUE(std::get<SppSet>(empty).profiles.empty());
}

TEST(JsonIo, RoundTrip) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    ProfileDocument doc;
    switch (i % 4) {
      case 0: doc = random_ppp(rng); break;
      case 1: doc = random_spp(rng); break;
      case 2: doc = PppSet{{random_ppp(rng), random_ppp(rng)}}; break;
      default: doc = SppSet{{random_spp(rng)}}; break;
    }
    EXPECT_EQ(parse_document(to_json(doc)), doc);
    EXPECT_EQ(parse_document(to_json(doc).dump()), doc);
  }
}

TEST(JsonIo, RejectsInvalidDocuments) {
  Json extra = ppp_json(5);
  extra["traits"]["XX"] = 3;
  EXPECT_THROW(parse_document(extra), InvalidDocument);

  Json missing = ppp_json(5);
  missing["traits"].erase("TI");
  EXPECT_THROW(parse_document(missing), InvalidDocument);

  EXPECT_THROW(parse_document(ppp_json(0)), InvalidDocument);
  EXPECT_THROW(parse_document(ppp_json(11)), InvalidDocument);

  Json text = ppp_json(5);
  text["traits"]["A"] = "5";
  EXPECT_THROW(parse_document(text), InvalidDocument);

  EXPECT_THROW(parse_document(std::string(R"({"type":"spp","factors":{"h":"++"}})")), InvalidDocument);
  EXPECT_THROW(parse_document(std::string(R"({"type":"box"})")), InvalidDocument);
  EXPECT_THROW(parse_document(std::string(R"({"traits":{}})")), InvalidDocument);
  EXPECT_THROW(parse_document(std::string("{not json")), InvalidDocument);
  EXPECT_THROW(parse_document(std::string(R"({"type":"ppp_set","profiles":{}})")), InvalidDocument);

  Json wrong_member{{"type", "ppp_set"}, {"profiles", Json::array({to_json(SzondiProfile::uniform(Signature::zero))})}};
  EXPECT_THROW(parse_document(wrong_member), InvalidDocument);
}

TEST(JsonIo, BoxOutput) {
  FactorBox zero = FactorBox::singleton(SzondiProfile::uniform(Signature::zero));
  Json j = to_json(zero, 5);
  EXPECT_EQ(j["type"], "spp_box");
  EXPECT_EQ(j["cardinality"], "1");
  EXPECT_EQ(j["allowed"]["hy"], Json::array({"0"}));
  ASSERT_EQ(j["sample"].size(), 1u);
  EXPECT_EQ(parse_document(j["sample"][0]), ProfileDocument(SzondiProfile::uniform(Signature::zero)));

  Json full = to_json(TraitBox::full());
  EXPECT_EQ(full["type"], "trait_box");
  EXPECT_EQ(full["cardinality"], "10000000000000000000000000000");
  EXPECT_EQ(full["allowed"]["Q4"].size(), 10u);
  EXPECT_TRUE(full["sample"].empty());

  Json none = to_json(FactorBox::empty(), 10);
  EXPECT_EQ(none["cardinality"], "0");
  EXPECT_TRUE(none["sample"].empty());
}

}  // namespace
}  // namespace pgc
