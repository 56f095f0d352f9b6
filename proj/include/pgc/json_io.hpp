#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pgc/box.hpp"
#include "pgc/space.hpp"

namespace pgc {

using Json = nlohmann::ordered_json;

class InvalidDocument : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PppSet {
  std::vector<CattellProfile> profiles;
  friend bool operator==(const PppSet&, const PppSet&) = default;
};

struct SppSet {
  std::vector<SzondiProfile> profiles;
  friend bool operator==(const SppSet&, const SppSet&) = default;
};

/// One of the four input document kinds: "ppp", "spp", "ppp_set", "spp_set".
using ProfileDocument = std::variant<CattellProfile, SzondiProfile, PppSet, SppSet>;

namespace detail {

inline const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidDocument(std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

inline CattellProfile parse_traits(const Json& traits) {
  if (!traits.is_object()) throw InvalidDocument("'traits' must be an object");
  std::array<bool, kTraitCount> seen{};
  std::array<TraitValue, kTraitCount> values{};
  for (const auto& [key, value] : traits.items()) {
    auto t = trait_from_token(key);
    if (!t) throw InvalidDocument("unknown trait '" + key + "'");
    if (!value.is_number_integer()) throw InvalidDocument("trait '" + key + "' must be an integer");
    auto v = value.get<long long>();
    if (v < TraitValue::kMin || v > TraitValue::kMax) {
      throw InvalidDocument("trait '" + key + "' value " + std::to_string(v) + " outside 1..10");
    }
    seen[index_of(*t)] = true;
    values[index_of(*t)] = TraitValue(static_cast<int>(v));
  }
  for (TraitId t : kAllTraits) {
    if (!seen[index_of(t)]) throw InvalidDocument("missing trait '" + std::string(to_token(t)) + "'");
  }
  return CattellProfile(values);
}

inline SzondiProfile parse_factors(const Json& factors) {
  if (!factors.is_object()) throw InvalidDocument("'factors' must be an object");
  std::array<bool, kFactorCount> seen{};
  std::array<Signature, kFactorCount> values{};
  for (const auto& [key, value] : factors.items()) {
    auto g = factor_from_token(key);
    if (!g) throw InvalidDocument("unknown factor '" + key + "'");
    if (!value.is_string()) throw InvalidDocument("factor '" + key + "' must be a signature string");
    auto s = signature_from_token(value.get<std::string>());
    if (!s) throw InvalidDocument("unknown signature '" + value.get<std::string>() + "'");
    seen[index_of(*g)] = true;
    values[index_of(*g)] = *s;
  }
  for (Factor g : kAllFactors) {
    if (!seen[index_of(g)]) throw InvalidDocument("missing factor '" + std::string(to_token(g)) + "'");
  }
  return SzondiProfile(values);
}

inline const Json& profile_list(const Json& doc) {
  const Json& list = require(doc, "profiles");
  if (!list.is_array()) throw InvalidDocument("'profiles' must be an array");
  return list;
}

}  // namespace detail

inline Json to_json(const CattellProfile& f) {
  Json traits = Json::object();
  for (TraitId t : kAllTraits) traits[std::string(to_token(t))] = f[t].value();
  return Json{{"type", "ppp"}, {"traits", std::move(traits)}};
}

inline Json to_json(const SzondiProfile& p) {
  Json factors = Json::object();
  for (Factor g : kAllFactors) factors[std::string(to_token(g))] = std::string(to_token(p[g]));
  return Json{{"type", "spp"}, {"factors", std::move(factors)}};
}

inline Json to_json(const PppSet& s) {
  Json list = Json::array();
  for (const auto& f : s.profiles) list.push_back(to_json(f));
  return Json{{"type", "ppp_set"}, {"profiles", std::move(list)}};
}

inline Json to_json(const SppSet& s) {
  Json list = Json::array();
  for (const auto& p : s.profiles) list.push_back(to_json(p));
  return Json{{"type", "spp_set"}, {"profiles", std::move(list)}};
}

inline Json to_json(const ProfileDocument& doc) {
  return std::visit([](const auto& d) { return to_json(d); }, doc);
}

/// Validates and decodes a profile document. Set members may be given
/// either as full typed documents or as bare trait/factor objects.
inline ProfileDocument parse_document(const Json& doc) {
  const Json& type = detail::require(doc, "type");
  if (!type.is_string()) throw InvalidDocument("'type' must be a string");
  const auto kind = type.get<std::string>();

  auto member = [](const Json& m, const char* key, const char* member_type) -> const Json& {
    if (m.is_object() && m.contains("type")) {
      if (m.at("type") != member_type) {
        throw InvalidDocument(std::string("set member must have type '") + member_type + "'");
      }
      return detail::require(m, key);
    }
    return m.is_object() && m.contains(key) ? m.at(key) : m;
  };

  if (kind == "ppp") return detail::parse_traits(detail::require(doc, "traits"));
  if (kind == "spp") return detail::parse_factors(detail::require(doc, "factors"));
  if (kind == "ppp_set") {
    PppSet set;
    for (const Json& m : detail::profile_list(doc)) {
      set.profiles.push_back(detail::parse_traits(member(m, "traits", "ppp")));
    }
    return set;
  }
  if (kind == "spp_set") {
    SppSet set;
    for (const Json& m : detail::profile_list(doc)) {
      set.profiles.push_back(detail::parse_factors(member(m, "factors", "spp")));
    }
    return set;
  }
  throw InvalidDocument("unknown document type '" + kind + "'");
}

inline ProfileDocument parse_document(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidDocument(std::string("malformed JSON: ") + e.what());
  }
  return parse_document(doc);
}

// ---------------------------------------------------------------------------
// Box output

inline Json to_json(const FactorBox& box, std::size_t sample_limit = 0) {
  Json allowed = Json::object();
  for (Factor g : kAllFactors) {
    Json list = Json::array();
    for (Signature s : box.allowed(g)) list.push_back(std::string(to_token(s)));
    allowed[std::string(to_token(g))] = std::move(list);
  }
  Json sample = Json::array();
  for (const auto& p : box.enumerate(sample_limit)) sample.push_back(to_json(p));
  return Json{{"type", "spp_box"},
              {"allowed", std::move(allowed)},
              {"cardinality", box.cardinality().str()},
              {"sample", std::move(sample)}};
}

inline Json to_json(const TraitBox& box, std::size_t sample_limit = 0) {
  Json allowed = Json::object();
  for (TraitId t : kAllTraits) {
    Json list = Json::array();
    for (TraitValue v : box.allowed(t)) list.push_back(v.value());
    allowed[std::string(to_token(t))] = std::move(list);
  }
  Json sample = Json::array();
  for (const auto& f : box.enumerate(sample_limit)) sample.push_back(to_json(f));
  return Json{{"type", "trait_box"},
              {"allowed", std::move(allowed)},
              {"cardinality", box.cardinality().str()},
              {"sample", std::move(sample)}};
}

}  // namespace pgc
