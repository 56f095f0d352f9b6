#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pgc/space.hpp"

namespace pgc {

using Cardinality = boost::multiprecision::cpp_int;

/// A product set over a profile space: one allowed-value set per dimension.
/// The box denotes { x | for all d: x[d] in allowed(d) }. Any empty
/// dimension makes the whole box empty; the raw per-dimension sets are kept
/// anyway so callers can see which dimension emptied it.
template <class Space>
class Box {
 public:
  using Dimension = typename Space::Dimension;
  using Value = typename Space::Value;
  using Mask = std::uint16_t;
  using ProfileType = Profile<Space>;

  static_assert(Space::kValues <= 16, "value alphabet must fit the mask");
  static constexpr Mask kFullMask = static_cast<Mask>((1u << Space::kValues) - 1u);

  /// Default is the full box (the whole space).
  constexpr Box() { masks_.fill(kFullMask); }

  static constexpr Box full() { return Box(); }

  static constexpr Box empty() {
    Box b;
    b.masks_.fill(0);
    return b;
  }

  static constexpr Box singleton(const ProfileType& x) {
    Box b;
    for (std::size_t i = 0; i < Space::kDimensions; ++i) b.masks_[i] = bit(x.at(i));
    return b;
  }

  static constexpr Mask bit(Value v) { return static_cast<Mask>(1u << Space::index(v)); }

  static constexpr Mask mask_of(std::initializer_list<Value> values) {
    Mask m = 0;
    for (Value v : values) m |= bit(v);
    return m;
  }

  constexpr Mask mask(Dimension d) const { return masks_[Space::index(d)]; }
  constexpr Mask mask_at(std::size_t i) const { return masks_[i]; }

  constexpr Box& restrict(Dimension d, Mask allowed) {
    masks_[Space::index(d)] &= allowed;
    return *this;
  }

  constexpr Box& set(Dimension d, Mask allowed) {
    masks_[Space::index(d)] = allowed & kFullMask;
    return *this;
  }

  constexpr bool allows(Dimension d, Value v) const { return (mask(d) & bit(v)) != 0; }

  std::vector<Value> allowed(Dimension d) const {
    std::vector<Value> out;
    for (std::size_t j = 0; j < Space::kValues; ++j) {
      if (mask(d) & (1u << j)) out.push_back(Space::value(j));
    }
    return out;
  }

  constexpr bool is_empty() const {
    return std::any_of(masks_.begin(), masks_.end(), [](Mask m) { return m == 0; });
  }

  constexpr bool is_full() const {
    return std::all_of(masks_.begin(), masks_.end(), [](Mask m) { return m == kFullMask; });
  }

  constexpr bool contains(const ProfileType& x) const {
    for (std::size_t i = 0; i < Space::kDimensions; ++i) {
      if ((masks_[i] & bit(x.at(i))) == 0) return false;
    }
    return true;
  }

  friend constexpr Box intersect(const Box& a, const Box& b) {
    Box out;
    for (std::size_t i = 0; i < Space::kDimensions; ++i) out.masks_[i] = a.masks_[i] & b.masks_[i];
    return out;
  }

  /// Set inclusion. The empty box is included in every box.
  constexpr bool subset_of(const Box& other) const {
    if (is_empty()) return true;
    for (std::size_t i = 0; i < Space::kDimensions; ++i) {
      if ((masks_[i] & ~other.masks_[i]) != 0) return false;
    }
    return true;
  }

  /// Empty boxes collapse to the all-empty representation; non-empty boxes
  /// are already canonical.
  constexpr Box canonical() const { return is_empty() ? empty() : *this; }

  /// Set equality, not mask equality: two empty boxes are equal.
  friend constexpr bool operator==(const Box& a, const Box& b) {
    return a.canonical().masks_ == b.canonical().masks_;
  }

  bool same_masks(const Box& other) const { return masks_ == other.masks_; }

  Cardinality cardinality() const {
    Cardinality n = 1;
    for (Mask m : masks_) n *= std::popcount(m);
    return n;
  }

  /// Members in lexicographic order: dimension 0 most significant, values
  /// in declaration order. Stops after `limit` members.
  std::vector<ProfileType> enumerate(std::size_t limit) const {
    std::vector<ProfileType> out;
    if (is_empty() || limit == 0) return out;

    std::array<std::vector<Value>, Space::kDimensions> choices;
    for (std::size_t i = 0; i < Space::kDimensions; ++i) choices[i] = allowed(Space::dimension(i));

    std::array<std::size_t, Space::kDimensions> cursor{};
    while (true) {
      std::array<Value, Space::kDimensions> values{};
      for (std::size_t i = 0; i < Space::kDimensions; ++i) values[i] = choices[i][cursor[i]];
      out.emplace_back(values);
      if (out.size() == limit) return out;

      std::size_t i = Space::kDimensions;
      while (i > 0) {
        --i;
        if (++cursor[i] < choices[i].size()) break;
        cursor[i] = 0;
        if (i == 0) return out;
      }
    }
  }

  /// Visits every member in enumeration order without materializing them.
  template <class Visitor>
  void for_each(Visitor&& visit) const {
    if (is_empty()) return;
    std::array<std::vector<Value>, Space::kDimensions> choices;
    for (std::size_t i = 0; i < Space::kDimensions; ++i) choices[i] = allowed(Space::dimension(i));
    std::array<std::size_t, Space::kDimensions> cursor{};
    std::array<Value, Space::kDimensions> values{};
    for (std::size_t i = 0; i < Space::kDimensions; ++i) values[i] = choices[i][0];
    while (true) {
      visit(ProfileType(values));
      std::size_t i = Space::kDimensions;
      while (true) {
        if (i == 0) return;
        --i;
        if (++cursor[i] < choices[i].size()) {
          values[i] = choices[i][cursor[i]];
          break;
        }
        cursor[i] = 0;
        values[i] = choices[i][0];
      }
    }
  }

 private:
  std::array<Mask, Space::kDimensions> masks_{};
};

using FactorBox = Box<SzondiSpace>;
using TraitBox = Box<CattellSpace>;

/// Image of a factor box under signature_flip, dimension by dimension.
inline FactorBox flip(const FactorBox& box) {
  FactorBox out;
  for (Factor f : kAllFactors) {
    FactorBox::Mask m = 0;
    for (Signature s : box.allowed(f)) m |= FactorBox::bit(signature_flip(s));
    out.set(f, m);
  }
  return out;
}

}  // namespace pgc
