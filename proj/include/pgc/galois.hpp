#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pgc/box.hpp"
#include "pgc/formula.hpp"
#include "pgc/space.hpp"
#include "pgc/table.hpp"
#include "pgc/translation.hpp"

namespace pgc {

inline constexpr std::size_t kDefaultEnumerationBound = 10'000'000;

class SubspaceTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A restricted region of both profile spaces for brute-force checks.
struct Subspace {
  FactorBox spp = FactorBox::full();
  TraitBox ppp = TraitBox::full();

  /// Each side as a box with no empty dimension.
  static Subspace of(FactorBox spp, TraitBox ppp) {
    if (spp.is_empty() || ppp.is_empty()) {
      throw std::invalid_argument("subspace dimensions must be non-empty");
    }
    return Subspace{spp, ppp};
  }
};

/// One factor on which two selected cells admit no common signature.
struct FactorConflict {
  Factor factor;
  TraitId first_trait;
  TraitValue first_value;
  TraitId second_trait;
  TraitValue second_value;
};

/// The right and left polarities between sets of Cattell profiles and sets
/// of Szondi profiles, backed by one translation table.
///
/// Both polarities produce product sets. That relies on every table cell
/// having a box form, which the constructor checks; a table that fails the
/// check is rejected with TableError.
class GaloisConnection {
 public:
  explicit GaloisConnection(const TranslationTable& table = TranslationTable::standard())
      : table_(table) {
    for (TraitId t : kAllTraits) {
      for (std::size_t j = 0; j < TraitValue::kCount; ++j) {
        boxes_[index_of(t)][j] = trait_box(t, TraitValue::from_index(j), table_);
      }
    }
  }

  const TranslationTable& table() const { return table_; }

  const FactorBox& cell_box(TraitId t, TraitValue v) const { return boxes_[index_of(t)][v.index()]; }

  // -- right polarity ------------------------------------------------------

  /// Szondi profiles whose formula entails f(F). Empty F gives everything.
  FactorBox right(std::span<const CattellProfile> profiles) const {
    FactorBox acc = FactorBox::full();
    for (const CattellProfile& f : profiles) {
      for (TraitId t : kAllTraits) acc = intersect(acc, cell_box(t, f[t]));
    }
    return acc;
  }

  FactorBox right(const CattellProfile& f) const { return right(std::span(&f, 1)); }

  /// Right polarity of every member of a trait box.
  FactorBox right(const TraitBox& profiles) const {
    FactorBox acc = FactorBox::full();
    if (profiles.is_empty()) return acc;
    for (TraitId t : kAllTraits) {
      for (TraitValue v : profiles.allowed(t)) acc = intersect(acc, cell_box(t, v));
    }
    return acc;
  }

  // -- left polarity -------------------------------------------------------

  /// Cattell profiles whose formula is entailed by p(P). Per trait, a value
  /// survives iff its cell holds in every member of P. Empty P gives
  /// everything.
  TraitBox left(std::span<const SzondiProfile> profiles) const {
    TraitBox out;
    for (TraitId t : kAllTraits) {
      TraitBox::Mask m = 0;
      for (std::size_t j = 0; j < TraitValue::kCount; ++j) {
        const FactorBox& cell = boxes_[index_of(t)][j];
        bool holds = true;
        for (const SzondiProfile& p : profiles) {
          if (!cell.contains(p)) {
            holds = false;
            break;
          }
        }
        if (holds) m |= static_cast<TraitBox::Mask>(1u << j);
      }
      out.set(t, m);
    }
    return out;
  }

  TraitBox left(const SzondiProfile& p) const { return left(std::span(&p, 1)); }

  /// Left polarity of every member of a factor box.
  TraitBox left(const FactorBox& profiles) const {
    TraitBox out;
    if (profiles.is_empty()) return out;
    for (TraitId t : kAllTraits) {
      TraitBox::Mask m = 0;
      for (std::size_t j = 0; j < TraitValue::kCount; ++j) {
        if (profiles.subset_of(boxes_[index_of(t)][j])) m |= static_cast<TraitBox::Mask>(1u << j);
      }
      out.set(t, m);
    }
    return out;
  }

  // -- closures and kernels ------------------------------------------------

  FactorBox closure_spp(std::span<const SzondiProfile> profiles) const { return right(left(profiles)); }
  TraitBox closure_ppp(std::span<const CattellProfile> profiles) const { return left(right(profiles)); }

  bool kernel_equivalent_ppp(std::span<const CattellProfile> a, std::span<const CattellProfile> b) const {
    return right(a) == right(b);
  }

  bool kernel_equivalent_spp(std::span<const SzondiProfile> a, std::span<const SzondiProfile> b) const {
    return left(a) == left(b);
  }

  // -- brute-force oracles -------------------------------------------------

  /// Members of the restricted SPP side whose formula entails f(F), found
  /// by direct entailment checks, in enumeration order.
  std::vector<SzondiProfile> right_oracle(std::span<const CattellProfile> profiles, const Subspace& sub,
                                          std::size_t bound = kDefaultEnumerationBound) const {
    check_size(sub.spp.cardinality(), bound);
    const Formula target = ppp_set_formula(profiles, table_);
    std::vector<SzondiProfile> out;
    sub.spp.for_each([&](const SzondiProfile& p) {
      if (entails(spp_formula(p), target)) out.push_back(p);
    });
    return out;
  }

  /// Members of the restricted PPP side whose formula is entailed by p(P).
  std::vector<CattellProfile> left_oracle(std::span<const SzondiProfile> profiles, const Subspace& sub,
                                          std::size_t bound = kDefaultEnumerationBound) const {
    check_size(sub.ppp.cardinality(), bound);
    const Entailer premise(spp_set_formula(profiles));
    std::vector<CattellProfile> out;
    sub.ppp.for_each([&](const CattellProfile& f) {
      if (premise.entails(ppp_formula(f, table_))) out.push_back(f);
    });
    return out;
  }

  // -- diagnostics ---------------------------------------------------------

  /// For each factor emptied by right(F), the pairs of selected cells whose
  /// allowed signatures on that factor are disjoint.
  std::vector<FactorConflict> conflicts(std::span<const CattellProfile> profiles) const {
    std::vector<std::pair<TraitId, TraitValue>> cells;
    for (const CattellProfile& f : profiles) {
      for (TraitId t : kAllTraits) {
        std::pair<TraitId, TraitValue> c{t, f[t]};
        if (std::find(cells.begin(), cells.end(), c) == cells.end()) cells.push_back(c);
      }
    }
    const FactorBox image = right(profiles);
    std::vector<FactorConflict> out;
    for (Factor g : kAllFactors) {
      if (image.mask(g) != 0) continue;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = i + 1; j < cells.size(); ++j) {
          auto [t1, v1] = cells[i];
          auto [t2, v2] = cells[j];
          if ((cell_box(t1, v1).mask(g) & cell_box(t2, v2).mask(g)) == 0) {
            out.push_back({g, t1, v1, t2, v2});
          }
        }
      }
    }
    return out;
  }

 private:
  static void check_size(const Cardinality& n, std::size_t bound) {
    if (n > bound) {
      throw SubspaceTooLarge("subspace has " + n.str() + " points, bound is " + std::to_string(bound));
    }
  }

  TranslationTable table_;
  std::array<std::array<FactorBox, TraitValue::kCount>, kTraitCount> boxes_;
};

}  // namespace pgc
