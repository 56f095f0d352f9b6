#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pgc/box.hpp"
#include "pgc/formula.hpp"
#include "pgc/space.hpp"

namespace pgc {

namespace table_data {

struct Row {
  std::string_view trait;
  std::array<std::string_view, 10> cells;  // values 1..10
};

// Trait-by-value translation of PPP cells into LPL, one S-expression per
// cell, transcribed cell by cell. Children keep the printed order.
inline constexpr std::array<Row, kTraitCount> kRows = {{
    {"A",
     {
      "(atom h -!!)",  // 1
      "(atom h -!)",  // 2
      "(atom h -)",  // 3
      "(atom h -)",  // 4
      "(atom h 0)",  // 5
      "(atom h 0)",  // 6
      "(atom h +)",  // 7
      "(atom h +)",  // 8
      "(atom h +!)",  // 9
      "(atom h +!!)",  // 10
     }},
    {"B",
     {
      "(and (atom k +!!) (atom p -!!))",  // 1
      "(and (atom k +!) (atom p -!))",  // 2
      "(and (atom k +) (atom p -))",  // 3
      "(and (atom k +) (atom p -))",  // 4
      "(and (atom k 0) (atom p 0))",  // 5
      "(and (atom k 0) (atom p 0))",  // 6
      "(and (atom k -) (atom p +))",  // 7
      "(and (atom k -) (atom p +))",  // 8
      "(and (atom k -!) (atom p +!))",  // 9
      "(and (atom k -!!) (atom p +!!))",  // 10
     }},
    {"C",
     {
      "(atom d +!!)",  // 1
      "(atom d +!)",  // 2
      "(atom d +)",  // 3
      "(atom d +)",  // 4
      "(atom d 0)",  // 5
      "(atom d 0)",  // 6
      "(atom d -)",  // 7
      "(atom d -)",  // 8
      "(atom d -!)",  // 9
      "(atom d -!!)",  // 10
     }},
    {"E",
     {
      "(atom s -!!)",  // 1
      "(atom s -!)",  // 2
      "(atom s -)",  // 3
      "(atom s -)",  // 4
      "(atom s 0)",  // 5
      "(atom s 0)",  // 6
      "(atom s +)",  // 7
      "(atom s +)",  // 8
      "(atom s +!)",  // 9
      "(atom s +!!)",  // 10
     }},
    {"F",
     {
      "(atom k -!!)",  // 1
      "(atom k -!)",  // 2
      "(atom k -)",  // 3
      "(atom k -)",  // 4
      "(atom k 0)",  // 5
      "(atom k 0)",  // 6
      "(atom k +)",  // 7
      "(atom k +)",  // 8
      "(atom k +!)",  // 9
      "(atom k +!!)",  // 10
     }},
    {"G",
     {
      "(and (atom e -!!) (atom hy +!!) (atom k +!!))",  // 1
      "(and (atom e -!) (atom hy +!) (atom k +!))",  // 2
      "(and (atom e -) (atom hy +) (atom k +))",  // 3
      "(and (atom e -) (atom hy +) (atom k +))",  // 4
      "(and (atom e 0) (atom hy 0) (atom k 0))",  // 5
      "(and (atom e 0) (atom hy 0) (atom k 0))",  // 6
      "(and (atom e +) (atom hy -) (atom k -))",  // 7
      "(and (atom e +) (atom hy -) (atom k -))",  // 8
      "(and (atom e +!) (atom hy -!) (atom k -!))",  // 9
      "(and (atom e +!!) (atom hy -!!) (atom k -!!))",  // 10
     }},
    {"H",
     {
      "(and (atom hy -!!) (atom d -!!))",  // 1
      "(and (atom hy -!) (atom d -!))",  // 2
      "(and (atom hy -) (atom d -))",  // 3
      "(and (atom hy -) (atom d -))",  // 4
      "(and (atom hy 0) (atom d 0))",  // 5
      "(and (atom hy 0) (atom d 0))",  // 6
      "(and (atom hy +) (atom d +))",  // 7
      "(and (atom hy +) (atom d +))",  // 8
      "(and (atom hy +!) (atom d +!))",  // 9
      "(and (atom hy +!!) (atom d +!!))",  // 10
     }},
    {"I",
     {
      "(and (atom h -!!) (atom hy +!!) (atom p +!!))",  // 1
      "(and (atom h -!) (atom hy +!) (atom p +!))",  // 2
      "(and (atom h -) (atom hy +) (atom p +))",  // 3
      "(and (atom h -) (atom hy +) (atom p +))",  // 4
      "(and (atom h 0) (atom hy 0) (atom p 0))",  // 5
      "(and (atom h 0) (atom hy 0) (atom p 0))",  // 6
      "(and (atom h +) (atom hy -) (atom p -))",  // 7
      "(and (atom h +) (atom hy -) (atom p -))",  // 8
      "(and (atom h +!) (atom hy -!) (atom p -!))",  // 9
      "(and (atom h +!!) (atom hy -!!) (atom p -!!))",  // 10
     }},
    {"L",
     {
      "(and (atom k +!!) (atom p +!!))",  // 1
      "(and (atom k +!) (atom p +!))",  // 2
      "(and (atom k +) (atom p +))",  // 3
      "(and (atom k +) (atom p +))",  // 4
      "(and (atom k 0) (atom p 0))",  // 5
      "(and (atom k 0) (atom p 0))",  // 6
      "(and (atom k -) (atom p -))",  // 7
      "(and (atom k -) (atom p -))",  // 8
      "(and (atom k -!) (atom p -!))",  // 9
      "(and (atom k -!!) (atom p -!!))",  // 10
     }},
    {"M",
     {
      "(atom p -!!)",  // 1
      "(atom p -!)",  // 2
      "(atom p -)",  // 3
      "(atom p -)",  // 4
      "(atom p 0)",  // 5
      "(atom p 0)",  // 6
      "(atom p +)",  // 7
      "(atom p +)",  // 8
      "(atom p +!)",  // 9
      "(atom p +!!)",  // 10
     }},
    {"N",
     {
      "(atom hy +!!)",  // 1
      "(atom hy +!)",  // 2
      "(atom hy +)",  // 3
      "(atom hy +)",  // 4
      "(atom hy 0)",  // 5
      "(atom hy 0)",  // 6
      "(atom hy -)",  // 7
      "(atom hy -)",  // 8
      "(atom hy -!)",  // 9
      "(atom hy -!!)",  // 10
     }},
    {"O",
     {
      "(atom p +!!)",  // 1
      "(atom p +!)",  // 2
      "(atom p +)",  // 3
      "(atom p +)",  // 4
      "(atom p 0)",  // 5
      "(atom p 0)",  // 6
      "(atom p -)",  // 7
      "(atom p -)",  // 8
      "(atom p -!)",  // 9
      "(atom p -!!)",  // 10
     }},
    {"Q1",
     {
      "(atom d -!!)",  // 1
      "(atom d -!)",  // 2
      "(atom d -)",  // 3
      "(atom d -)",  // 4
      "(atom d 0)",  // 5
      "(atom d 0)",  // 6
      "(atom d +)",  // 7
      "(atom d +)",  // 8
      "(atom d +!)",  // 9
      "(atom d +!!)",  // 10
     }},
    {"Q2",
     {
      "(and (atom d +!!) (atom m +!!))",  // 1
      "(and (atom d +!) (atom m +!))",  // 2
      "(and (atom d +) (atom m +))",  // 3
      "(and (atom d +) (atom m +))",  // 4
      "(and (atom d 0) (atom m 0))",  // 5
      "(and (atom d 0) (atom m 0))",  // 6
      "(and (atom d -) (atom m -))",  // 7
      "(and (atom d -) (atom m -))",  // 8
      "(and (atom d -!) (atom m -!))",  // 9
      "(and (atom d -!!) (atom m -!!))",  // 10
     }},
    {"Q3",
     {
      "(atom k +!!)",  // 1
      "(atom k +!)",  // 2
      "(atom k +)",  // 3
      "(atom k +)",  // 4
      "(atom k 0)",  // 5
      "(atom k 0)",  // 6
      "(atom k pm)",  // 7
      "(atom k pm)",  // 8
      "(atom k pm^!)",  // 9
      "(atom k pm_!)",  // 10
     }},
    {"Q4",
     {
      "(atom e +!!)",  // 1
      "(atom e +!)",  // 2
      "(atom e +)",  // 3
      "(atom e +)",  // 4
      "(atom e 0)",  // 5
      "(atom e 0)",  // 6
      "(atom e -)",  // 7
      "(atom e -)",  // 8
      "(atom e -!)",  // 9
      "(atom e -!!)",  // 10
     }},
    {"PS",
     {
      "(and (atom k 0) (atom p +!!))",  // 1
      "(and (atom k 0) (atom p +!))",  // 2
      "(and (atom k 0) (atom p +))",  // 3
      "(and (atom k 0) (atom p +))",  // 4
      "(and (atom k 0) (atom p 0))",  // 5
      "(and (atom k 0) (atom p 0))",  // 6
      "(and (atom k 0) (atom p -))",  // 7
      "(and (atom k 0) (atom p -))",  // 8
      "(and (atom k 0) (atom p -!))",  // 9
      "(and (atom k 0) (atom p -!!))",  // 10
     }},
    {"HC",
     {
      "(and (atom hy +!!) (atom p +!!))",  // 1
      "(and (atom hy +!) (atom p +!))",  // 2
      "(and (atom hy +) (atom p +))",  // 3
      "(and (atom hy +) (atom p +))",  // 4
      "(and (atom hy 0) (atom p 0))",  // 5
      "(and (atom hy 0) (atom p 0))",  // 6
      "(and (atom hy -) (atom p -))",  // 7
      "(and (atom hy -) (atom p -))",  // 8
      "(and (atom hy -!) (atom p -!))",  // 9
      "(and (atom hy -!!) (atom p -!!))",  // 10
     }},
    {"ST",
     {
      "(and (atom s +!!) (atom k +!!))",  // 1
      "(and (atom s +!) (atom k +!))",  // 2
      "(and (atom s +) (atom k +))",  // 3
      "(and (atom s +) (atom k +))",  // 4
      "(and (atom s 0) (atom k 0))",  // 5
      "(and (atom s 0) (atom k 0))",  // 6
      "(and (atom s -) (atom k -))",  // 7
      "(and (atom s -) (atom k -))",  // 8
      "(and (atom s -!) (atom k -!))",  // 9
      "(and (atom s -!!) (atom k -!!))",  // 10
     }},
    {"AD",
     {
      "(and (atom p +!!) (atom d -!!))",  // 1
      "(and (atom p +!) (atom d -!))",  // 2
      "(and (atom p +) (atom d -))",  // 3
      "(and (atom p +) (atom d -))",  // 4
      "(and (atom p 0) (atom d 0))",  // 5
      "(and (atom p 0) (atom d 0))",  // 6
      "(and (atom p -) (atom d +))",  // 7
      "(and (atom p -) (atom d +))",  // 8
      "(and (atom p -!) (atom d +!))",  // 9
      "(and (atom p -!!) (atom d +!!))",  // 10
     }},
    {"LE",
     {
      "(or (atom s +!!!) (atom s -!!!))",  // 1
      "(or (atom s +!!!) (atom s -!!!))",  // 2
      "(or (atom s +!!) (atom s -!!))",  // 3
      "(or (atom s +!!) (atom s -!!))",  // 4
      "(or (atom s +!) (atom s -!))",  // 5
      "(or (atom s +!) (atom s -!))",  // 6
      "(or (atom s +) (atom s -))",  // 7
      "(or (atom s +) (atom s -))",  // 8
      "(atom s 0)",  // 9
      "(atom s 0)",  // 10
     }},
    {"SR",
     {
      "(and (atom s +!!) (atom k +!!) (atom p -!!))",  // 1
      "(and (atom s +!) (atom k +!) (atom p -!))",  // 2
      "(and (atom s +) (atom k +) (atom p -))",  // 3
      "(and (atom s +) (atom k +) (atom p -))",  // 4
      "(and (atom s 0) (atom k 0) (atom p 0))",  // 5
      "(and (atom s 0) (atom k 0) (atom p 0))",  // 6
      "(and (atom s -) (atom k -) (atom p +))",  // 7
      "(and (atom s -) (atom k -) (atom p +))",  // 8
      "(and (atom s -!) (atom k -!) (atom p +!))",  // 9
      "(and (atom s -!!) (atom k -!!) (atom p +!!))",  // 10
     }},
    {"AW",
     {
      "(and (atom d +!!) (atom m +!!))",  // 1
      "(and (atom d +!) (atom m +!))",  // 2
      "(and (atom d +) (atom m +))",  // 3
      "(and (atom d +) (atom m +))",  // 4
      "(and (atom d 0) (atom m 0))",  // 5
      "(and (atom d 0) (atom m 0))",  // 6
      "(and (atom d -) (atom m -))",  // 7
      "(and (atom d -) (atom m -))",  // 8
      "(and (atom d -!) (atom m -!))",  // 9
      "(and (atom d -!!) (atom m -!!))",  // 10
     }},
    {"PI",
     {
      "(and (or (atom k pm_!) (atom k pm^!)) (atom p 0))",  // 1
      "(and (or (atom k pm_!) (atom k pm^!)) (atom p 0))",  // 2
      "(and (atom k pm) (atom p 0))",  // 3
      "(and (atom k pm) (atom p 0))",  // 4
      "(and (atom k 0) (atom p 0))",  // 5
      "(and (atom k 0) (atom p 0))",  // 6
      "(and (atom k 0) (atom p pm))",  // 7
      "(and (atom k 0) (atom p pm))",  // 8
      "(and (atom k 0) (or (atom p pm_!) (atom p pm^!)))",  // 9
      "(and (atom k 0) (or (atom p pm_!) (atom p pm^!)))",  // 10
     }},
    {"OT",
     {
      "(and (atom k 0) (atom p -!!))",  // 1
      "(and (atom k 0) (atom p -!))",  // 2
      "(and (atom k 0) (atom p -))",  // 3
      "(and (atom k 0) (atom p -))",  // 4
      "(and (atom k 0) (atom p 0))",  // 5
      "(and (atom k 0) (atom p 0))",  // 6
      "(and (atom k pm) (atom p +))",  // 7
      "(and (atom k pm) (atom p +))",  // 8
      "(and (or (atom k pm_!) (atom k pm^!)) (atom p +!))",  // 9
      "(and (or (atom k pm_!) (atom k pm^!)) (atom p +!!))",  // 10
     }},
    {"AP",
     {
      "(and (atom k +!!) (atom p 0))",  // 1
      "(and (atom k +!) (atom p 0))",  // 2
      "(and (atom k +) (atom p 0))",  // 3
      "(and (atom k +) (atom p 0))",  // 4
      "(and (atom k 0) (atom p 0))",  // 5
      "(and (atom k 0) (atom p 0))",  // 6
      "(and (atom k -) (atom p pm))",  // 7
      "(and (atom k -) (atom p pm))",  // 8
      "(and (atom k -!) (or (atom p pm_!) (atom p pm^!)))",  // 9
      "(and (atom k -!!) (or (atom p pm_!) (atom p pm^!)))",  // 10
     }},
    {"TS",
     {
      "(and (atom e +!!) (atom d -!!))",  // 1
      "(and (atom e +!) (atom d -!))",  // 2
      "(and (atom e +) (atom d -))",  // 3
      "(and (atom e +) (atom d -))",  // 4
      "(and (atom e 0) (atom d 0))",  // 5
      "(and (atom e 0) (atom d 0))",  // 6
      "(and (atom e -) (atom d +))",  // 7
      "(and (atom e -) (atom d +))",  // 8
      "(and (atom e -!) (atom d +!))",  // 9
      "(and (atom e -!!) (atom d +!!))",  // 10
     }},
    {"TI",
     {
      "(and (atom hy -!!) (atom p -!!) (atom d -!!))",  // 1
      "(and (atom hy -!) (atom p -!) (atom d -!))",  // 2
      "(and (atom hy -) (atom p -) (atom d -))",  // 3
      "(and (atom hy -) (atom p -) (atom d -))",  // 4
      "(and (atom hy 0) (atom p 0) (atom d 0))",  // 5
      "(and (atom hy 0) (atom p 0) (atom d 0))",  // 6
      "(and (atom hy +) (atom p +) (atom d +))",  // 7
      "(and (atom hy +) (atom p +) (atom d +))",  // 8
      "(and (atom hy +!) (atom p +!) (atom d +!))",  // 9
      "(and (atom hy +!!) (atom p +!!) (atom d +!!))",  // 10
     }},

}};

}  // namespace table_data

/// FNV-1a 64 of the `table dump` CSV for the standard table.
inline constexpr std::uint64_t kStandardTableChecksum = 0x35bb54fb191d96aeull;

inline std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

/// Box form of a formula, when it has one: conjunctions intersect, a
/// disjunction is a box only when its non-empty disjuncts agree on all
/// dimensions but one.
inline std::optional<FactorBox> box_of(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::top: return FactorBox::full();
    case Formula::Kind::bottom: return FactorBox::empty();
    case Formula::Kind::atom: {
      FactorBox b;
      b.set(phi.as_atom().factor, FactorBox::bit(phi.as_atom().signature));
      return b;
    }
    case Formula::Kind::conj: {
      FactorBox acc;
      for (const Formula& c : phi.children()) {
        auto sub = box_of(c);
        if (!sub) return std::nullopt;
        acc = intersect(acc, *sub);
      }
      return acc;
    }
    case Formula::Kind::disj: {
      std::vector<FactorBox> parts;
      for (const Formula& c : phi.children()) {
        auto sub = box_of(c);
        if (!sub) return std::nullopt;
        if (!sub->is_empty()) parts.push_back(*sub);
      }
      if (parts.empty()) return FactorBox::empty();
      FactorBox acc = parts.front();
      std::optional<std::size_t> differing;
      for (const FactorBox& b : parts) {
        for (std::size_t i = 0; i < kFactorCount; ++i) {
          if (b.mask_at(i) == acc.mask_at(i)) continue;
          if (differing && *differing != i) return std::nullopt;
          differing = i;
        }
      }
      if (differing) {
        FactorBox::Mask m = 0;
        for (const FactorBox& b : parts) m |= b.mask_at(*differing);
        acc.set(kAllFactors[*differing], m);
      }
      return acc;
    }
  }
  return std::nullopt;
}

class TableError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The translation of (trait, value) pairs into formulas: 280 cells.
class TranslationTable {
 public:
  /// The published translation.
  static const TranslationTable& standard() {
    static const TranslationTable table = [] {
      TranslationTable t;
      for (std::size_t i = 0; i < kTraitCount; ++i) {
        const auto& row = table_data::kRows[i];
        if (trait_from_token(row.trait) != kAllTraits[i]) {
          throw TableError("table row " + std::to_string(i) + " is out of order");
        }
        for (std::size_t j = 0; j < TraitValue::kCount; ++j) {
          t.cells_[i][j] = parse_sexpr(row.cells[j]);
        }
      }
      return t;
    }();
    return table;
  }

  const Formula& cell(TraitId t, TraitValue v) const { return cells_[index_of(t)][v.index()]; }

  /// Returns a copy with one cell replaced.
  TranslationTable with_cell(TraitId t, TraitValue v, Formula phi) const {
    TranslationTable copy = *this;
    copy.cells_[index_of(t)][v.index()] = std::move(phi);
    return copy;
  }

  /// CSV with a header line and one row per cell: trait,value,formula.
  std::string dump_csv() const {
    std::string out = "trait,value,formula\n";
    for (TraitId t : kAllTraits) {
      for (std::size_t j = 0; j < TraitValue::kCount; ++j) {
        TraitValue v = TraitValue::from_index(j);
        out += to_token(t);
        out += ',';
        out += std::to_string(v.value());
        out += ',';
        out += to_sexpr(cell(t, v));
        out += '\n';
      }
    }
    return out;
  }

  std::uint64_t checksum() const { return fnv1a64(dump_csv()); }

 private:
  TranslationTable() = default;

  std::array<std::array<Formula, TraitValue::kCount>, kTraitCount> cells_;
};

}  // namespace pgc
