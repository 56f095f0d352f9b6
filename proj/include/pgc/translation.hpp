#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgc/box.hpp"
#include "pgc/formula.hpp"
#include "pgc/space.hpp"
#include "pgc/table.hpp"

namespace pgc {

inline const Formula& trait_formula(TraitId t, TraitValue v,
                                    const TranslationTable& table = TranslationTable::standard()) {
  return table.cell(t, v);
}

/// Unconstrained factors map to the full signature set.
inline FactorBox trait_box(TraitId t, TraitValue v,
                           const TranslationTable& table = TranslationTable::standard()) {
  auto box = box_of(table.cell(t, v));
  if (!box) {
    throw TableError("cell (" + std::string(to_token(t)) + "," + std::to_string(v.value()) +
                     ") is not a product set");
  }
  return *box;
}

/// Conjunction of the 28 cells selected by the profile, in trait order.
inline Formula ppp_formula(const CattellProfile& f,
                           const TranslationTable& table = TranslationTable::standard()) {
  std::vector<Formula> parts;
  parts.reserve(kTraitCount);
  for (TraitId t : kAllTraits) parts.push_back(table.cell(t, f[t]));
  return Formula::conj(std::move(parts));
}

/// Conjunction over the set; top for the empty set.
inline Formula ppp_set_formula(std::span<const CattellProfile> profiles,
                               const TranslationTable& table = TranslationTable::standard()) {
  std::vector<Formula> parts;
  parts.reserve(profiles.size());
  for (const CattellProfile& f : profiles) parts.push_back(ppp_formula(f, table));
  return Formula::conj(std::move(parts));
}

/// Conjunction of the profile's 8 signed factors, in factor order.
inline Formula spp_formula(const SzondiProfile& p) {
  std::vector<Formula> parts;
  parts.reserve(kFactorCount);
  for (Factor g : kAllFactors) parts.push_back(Formula::atom(g, p[g]));
  return Formula::conj(std::move(parts));
}

/// Disjunction over the set; bottom for the empty set.
inline Formula spp_set_formula(std::span<const SzondiProfile> profiles) {
  std::vector<Formula> parts;
  parts.reserve(profiles.size());
  for (const SzondiProfile& p : profiles) parts.push_back(spp_formula(p));
  return Formula::disj(std::move(parts));
}

/// Szondi's reference profile (+,+,-,-,-,-,+,+).
inline SzondiProfile norm_profile() {
  using S = Signature;
  return SzondiProfile({S::plus, S::plus, S::minus, S::minus, S::minus, S::minus, S::plus, S::plus});
}

// ---------------------------------------------------------------------------
// Global ("Big Five") factors as disjunctions of primary-trait cells.

enum class GlobalFactor { extraversion, high_anxiety, tough_mindedness, independence, self_control };

inline constexpr std::array<GlobalFactor, 5> kAllGlobalFactors = {
    GlobalFactor::extraversion, GlobalFactor::high_anxiety, GlobalFactor::tough_mindedness,
    GlobalFactor::independence, GlobalFactor::self_control,
};

inline constexpr std::array<std::string_view, 5> kGlobalFactorTokens = {
    "Extraversion", "HighAnxiety", "ToughMindedness", "Independence", "SelfControl",
};

inline constexpr std::string_view to_token(GlobalFactor g) {
  return kGlobalFactorTokens[static_cast<std::size_t>(g)];
}

inline std::optional<GlobalFactor> global_factor_from_token(std::string_view token) {
  for (std::size_t i = 0; i < kAllGlobalFactors.size(); ++i) {
    if (kGlobalFactorTokens[i] == token) return kAllGlobalFactors[i];
  }
  return std::nullopt;
}

struct GlobalComponent {
  TraitId trait;
  bool reversed;
};

inline std::vector<GlobalComponent> global_components(GlobalFactor g) {
  using T = TraitId;
  switch (g) {
    case GlobalFactor::extraversion:
      return {{T::A, false}, {T::F, false}, {T::H, false}, {T::N, true}, {T::Q2, true}};
    case GlobalFactor::high_anxiety:
      return {{T::C, false}, {T::L, false}, {T::O, false}, {T::Q4, false}};
    case GlobalFactor::tough_mindedness:
      return {{T::A, true}, {T::I, true}, {T::M, false}, {T::Q1, false}};
    case GlobalFactor::independence:
      return {{T::E, false}, {T::H, false}, {T::L, true}, {T::Q1, false}};
    case GlobalFactor::self_control:
      return {{T::F, true}, {T::G, false}, {T::M, true}, {T::Q3, false}};
  }
  return {};
}

/// How reversed components map a value: `as_printed` uses 10 - v, which has
/// no valid image at v = 10; `corrected` uses 11 - v.
enum class ReversalMode { as_printed, corrected };

class ReversedValueOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline TraitValue reversed_value(TraitValue v, ReversalMode mode) {
  int r = (mode == ReversalMode::as_printed ? 10 : 11) - v.value();
  if (r < TraitValue::kMin || r > TraitValue::kMax) {
    throw ReversedValueOutOfRange("reversed value " + std::to_string(r) + " for v=" +
                                  std::to_string(v.value()) + " is outside 1..10");
  }
  return TraitValue(r);
}

inline Formula global_factor_formula(GlobalFactor g, TraitValue v,
                                     ReversalMode mode = ReversalMode::as_printed,
                                     const TranslationTable& table = TranslationTable::standard()) {
  std::vector<Formula> parts;
  for (const GlobalComponent& c : global_components(g)) {
    parts.push_back(table.cell(c.trait, c.reversed ? reversed_value(v, mode) : v));
  }
  return Formula::disj(std::move(parts));
}

}  // namespace pgc
