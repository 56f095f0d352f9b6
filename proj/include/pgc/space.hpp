#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pgc/signature.hpp"

namespace pgc {

// ---------------------------------------------------------------------------
// Szondi factors

enum class Factor : std::uint8_t { h, s, e, hy, k, p, d, m };

enum class Vector : std::uint8_t { S, P, Sch, C };

inline constexpr std::size_t kFactorCount = 8;

inline constexpr std::array<Factor, kFactorCount> kAllFactors = {
    Factor::h, Factor::s, Factor::e, Factor::hy, Factor::k, Factor::p, Factor::d, Factor::m,
};

inline constexpr std::array<std::string_view, kFactorCount> kFactorTokens = {
    "h", "s", "e", "hy", "k", "p", "d", "m",
};

constexpr std::size_t index_of(Factor f) { return static_cast<std::size_t>(f); }
constexpr std::string_view to_token(Factor f) { return kFactorTokens[index_of(f)]; }

/// Two consecutive factors per vector.
constexpr Vector vector_of(Factor f) { return static_cast<Vector>(index_of(f) / 2); }

constexpr std::optional<Factor> factor_from_token(std::string_view token) {
  for (std::size_t i = 0; i < kFactorCount; ++i) {
    if (kFactorTokens[i] == token) return kAllFactors[i];
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Cattell / PsychEval traits

enum class TraitId : std::uint8_t {
  A, B, C, E, F, G, H, I, L, M, N, O, Q1, Q2, Q3, Q4,
  PS, HC, ST, AD, LE, SR, AW, PI, OT, AP, TS, TI,
};

enum class TraitKind : std::uint8_t { normal, abnormal };

inline constexpr std::size_t kTraitCount = 28;
inline constexpr std::size_t kNormalTraitCount = 16;

inline constexpr std::array<std::string_view, kTraitCount> kTraitTokens = {
    "A",  "B",  "C",  "E",  "F",  "G",  "H",  "I",  "L",  "M",  "N",  "O",  "Q1", "Q2",
    "Q3", "Q4", "PS", "HC", "ST", "AD", "LE", "SR", "AW", "PI", "OT", "AP", "TS", "TI",
};

inline constexpr std::array<TraitId, kTraitCount> kAllTraits = [] {
  std::array<TraitId, kTraitCount> out{};
  for (std::size_t i = 0; i < kTraitCount; ++i) out[i] = static_cast<TraitId>(i);
  return out;
}();

constexpr std::size_t index_of(TraitId t) { return static_cast<std::size_t>(t); }
constexpr std::string_view to_token(TraitId t) { return kTraitTokens[index_of(t)]; }

constexpr TraitKind kind_of(TraitId t) {
  return index_of(t) < kNormalTraitCount ? TraitKind::normal : TraitKind::abnormal;
}

constexpr std::optional<TraitId> trait_from_token(std::string_view token) {
  for (std::size_t i = 0; i < kTraitCount; ++i) {
    if (kTraitTokens[i] == token) return kAllTraits[i];
  }
  return std::nullopt;
}

/// A trait score in 1..10; 1..5 is the low range, 6..10 the high range.
class TraitValue {
 public:
  static constexpr int kMin = 1;
  static constexpr int kMax = 10;
  static constexpr std::size_t kCount = 10;

  constexpr TraitValue() = default;
  constexpr explicit TraitValue(int v) : v_(v) {
    if (v < kMin || v > kMax) {
      throw std::out_of_range("trait value " + std::to_string(v) + " outside 1..10");
    }
  }

  constexpr int value() const { return v_; }
  constexpr bool high_range() const { return v_ >= 6; }
  constexpr std::size_t index() const { return static_cast<std::size_t>(v_ - kMin); }

  static constexpr TraitValue from_index(std::size_t i) {
    return TraitValue(static_cast<int>(i) + kMin);
  }

  friend constexpr auto operator<=>(TraitValue, TraitValue) = default;

 private:
  int v_ = kMin;
};

// ---------------------------------------------------------------------------
// Profile spaces. A space is a finite product of identical finite value
// alphabets; SzondiSpace and CattellSpace are the two instances.

struct SzondiSpace {
  using Dimension = Factor;
  using Value = Signature;
  static constexpr std::size_t kDimensions = kFactorCount;
  static constexpr std::size_t kValues = kSignatureCount;
  static constexpr std::string_view kName = "spp";

  static constexpr Dimension dimension(std::size_t i) { return kAllFactors[i]; }
  static constexpr Value value(std::size_t i) { return kAllSignatures[i]; }
  static constexpr std::size_t index(Dimension d) { return index_of(d); }
  static constexpr std::size_t index(Value v) { return index_of(v); }
};

struct CattellSpace {
  using Dimension = TraitId;
  using Value = TraitValue;
  static constexpr std::size_t kDimensions = kTraitCount;
  static constexpr std::size_t kValues = TraitValue::kCount;
  static constexpr std::string_view kName = "ppp";

  static constexpr Dimension dimension(std::size_t i) { return kAllTraits[i]; }
  static constexpr Value value(std::size_t i) { return TraitValue::from_index(i); }
  static constexpr std::size_t index(Dimension d) { return index_of(d); }
  static constexpr std::size_t index(Value v) { return v.index(); }
};

/// A total assignment of one value to every dimension of a space.
template <class Space>
class Profile {
 public:
  using Dimension = typename Space::Dimension;
  using Value = typename Space::Value;

  constexpr Profile() = default;
  constexpr explicit Profile(const std::array<Value, Space::kDimensions>& values)
      : values_(values) {}

  static constexpr Profile uniform(Value v) {
    std::array<Value, Space::kDimensions> values{};
    values.fill(v);
    return Profile(values);
  }

  constexpr Value operator[](Dimension d) const { return values_[Space::index(d)]; }
  constexpr Value at(std::size_t i) const { return values_[i]; }

  constexpr Profile with(Dimension d, Value v) const {
    Profile copy = *this;
    copy.values_[Space::index(d)] = v;
    return copy;
  }

  constexpr const std::array<Value, Space::kDimensions>& values() const { return values_; }

  friend constexpr bool operator==(const Profile&, const Profile&) = default;
  friend constexpr auto operator<=>(const Profile&, const Profile&) = default;

 private:
  std::array<Value, Space::kDimensions> values_{};
};

using SzondiProfile = Profile<SzondiSpace>;
using CattellProfile = Profile<CattellSpace>;

}  // namespace pgc
