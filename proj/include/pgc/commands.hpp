#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "pgc/galois.hpp"
#include "pgc/json_io.hpp"
#include "pgc/properties.hpp"
#include "pgc/random.hpp"
#include "pgc/translation.hpp"

namespace pgc::commands {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kPropertyViolation = 2, kIoError = 3 };

/// Traits usually quoted as failing for the norm profile. Recomputed, not
/// trusted: see failing_traits().
inline const std::vector<TraitId>& reference_norm_failures() {
  using T = TraitId;
  static const std::vector<TraitId> traits = {T::B,  T::G,  T::H,  T::M,  T::Q3, T::PS, T::ST,
                                              T::LE, T::SR, T::PI, T::OT, T::AP, T::TS, T::TI};
  return traits;
}

/// Traits for which no value's cell holds in every member of P.
inline std::vector<TraitId> failing_traits(const GaloisConnection& conn, std::span<const SzondiProfile> P) {
  const TraitBox box = conn.left(P);
  std::vector<TraitId> out;
  for (TraitId t : kAllTraits) {
    if (box.mask(t) == 0) out.push_back(t);
  }
  return out;
}

inline std::vector<SzondiProfile> spp_members(const ProfileDocument& doc) {
  if (const auto* p = std::get_if<SzondiProfile>(&doc)) return {*p};
  if (const auto* s = std::get_if<SppSet>(&doc)) return s->profiles;
  throw InvalidDocument("expected an 'spp' or 'spp_set' document");
}

inline std::vector<CattellProfile> ppp_members(const ProfileDocument& doc) {
  if (const auto* f = std::get_if<CattellProfile>(&doc)) return {*f};
  if (const auto* s = std::get_if<PppSet>(&doc)) return s->profiles;
  throw InvalidDocument("expected a 'ppp' or 'ppp_set' document");
}

/// Right polarity as an spp_box document.
inline Json right(const GaloisConnection& conn, const ProfileDocument& doc, std::size_t enumerate = 0) {
  return to_json(conn.right(ppp_members(doc)), enumerate);
}

/// Left polarity as a trait_box document; with `explain`, every trait left
/// without values gets the evaluation of all ten cells.
inline Json left(const GaloisConnection& conn, const ProfileDocument& doc, bool explain = false) {
  const auto P = spp_members(doc);
  Json out = to_json(conn.left(P));
  if (explain) {
    Json details = Json::object();
    for (TraitId t : failing_traits(conn, P)) {
      Json cells = Json::array();
      for (std::size_t j = 0; j < TraitValue::kCount; ++j) {
        const TraitValue v = TraitValue::from_index(j);
        const Formula& phi = conn.table().cell(t, v);
        Json failing = Json::array();
        for (std::size_t i = 0; i < P.size(); ++i) {
          if (!eval(phi, P[i])) failing.push_back(i);
        }
        cells.push_back(Json{{"value", v.value()},
                             {"formula", to_sexpr(phi)},
                             {"holds", failing.empty()},
                             {"failing_members", std::move(failing)}});
      }
      details[std::string(to_token(t))] = std::move(cells);
    }
    out["explain"] = std::move(details);
  }
  return out;
}

/// The standard table with one cell altered so that column collapse fails.
inline TranslationTable corrupted_table() {
  return TranslationTable::standard().with_cell(TraitId::A, TraitValue(4),
                                                Formula::atom(Factor::h, Signature::plus3));
}

inline int check(std::ostream& os, const PropertyOptions& opts, bool corrupt = false) {
  const TranslationTable table = corrupt ? corrupted_table() : TranslationTable::standard();
  const PropertyReport report = run_property_suites(table, opts);
  if (report.results.empty()) {
    os << "no trials requested\n";
    return kOk;
  }
  report.print(os);
  os << (report.passed() ? "all properties hold\n" : "property violation\n");
  return report.passed() ? kOk : kPropertyViolation;
}

inline std::string table_dump(const TranslationTable& table = TranslationTable::standard()) {
  return table.dump_csv();
}

inline int norm_demo(std::ostream& os, const GaloisConnection& conn) {
  const SzondiProfile norm = norm_profile();
  os << "norm profile: " << describe(norm) << '\n';
  os << "p(norm) = " << to_sexpr(spp_formula(norm)) << '\n';

  const auto failing = failing_traits(conn, std::span(&norm, 1));
  os << "traits with no satisfiable value:";
  for (TraitId t : failing) os << ' ' << to_token(t);
  os << '\n';

  os << "reference failing list:";
  for (TraitId t : reference_norm_failures()) os << ' ' << to_token(t);
  os << '\n';

  const TraitBox image = conn.left(norm);
  for (TraitId t : reference_norm_failures()) {
    if (std::ranges::find(failing, t) != failing.end()) continue;
    os << "  discrepancy: " << to_token(t) << " holds at value(s)";
    for (TraitValue v : image.allowed(t)) os << ' ' << v.value();
    os << '\n';
  }
  for (TraitId t : failing) {
    if (std::ranges::find(reference_norm_failures(), t) == reference_norm_failures().end()) {
      os << "  discrepancy: " << to_token(t) << " fails but is not in the reference list\n";
    }
  }

  os << "left polarity: " << (image.is_empty() ? "EMPTY" : "NON-EMPTY") << '\n';
  return kOk;
}

struct EmptyImageReport {
  std::size_t samples = 0;
  std::size_t empty = 0;
  // (factor, trait, trait) -> number of sampled profiles showing the conflict
  std::map<std::tuple<Factor, TraitId, TraitId>, std::size_t> conflicts;
  std::vector<CattellProfile> examples;
};

inline EmptyImageReport find_empty(const GaloisConnection& conn, std::size_t samples, std::uint64_t seed,
                                   std::size_t keep_examples = 3) {
  EmptyImageReport report;
  report.samples = samples;
  Rng rng(seed);
  for (std::size_t i = 0; i < samples; ++i) {
    const CattellProfile f = random_ppp(rng);
    if (!conn.right(f).is_empty()) continue;
    ++report.empty;
    if (report.examples.size() < keep_examples) report.examples.push_back(f);
    std::set<std::tuple<Factor, TraitId, TraitId>> seen;
    for (const FactorConflict& c : conn.conflicts(std::span(&f, 1))) {
      seen.emplace(c.factor, std::min(c.first_trait, c.second_trait), std::max(c.first_trait, c.second_trait));
    }
    for (const auto& key : seen) ++report.conflicts[key];
  }
  return report;
}

inline void print(std::ostream& os, const EmptyImageReport& report, std::size_t top = 15) {
  os << "samples: " << report.samples << '\n';
  os << "empty right images: " << report.empty << '\n';
  std::vector<std::pair<std::tuple<Factor, TraitId, TraitId>, std::size_t>> ranked(report.conflicts.begin(),
                                                                                    report.conflicts.end());
  std::ranges::stable_sort(ranked, std::greater<>{}, &decltype(ranked)::value_type::second);
  os << "conflicting trait pairs (factor: trait vs trait, profiles):\n";
  for (std::size_t i = 0; i < ranked.size() && i < top; ++i) {
    const auto& [key, count] = ranked[i];
    os << "  " << to_token(std::get<0>(key)) << ": " << to_token(std::get<1>(key)) << " vs "
       << to_token(std::get<2>(key)) << "  " << count << '\n';
  }
  for (const auto& f : report.examples) os << "example: " << describe(f) << '\n';
}

}  // namespace pgc::commands
