#pragma once

#include <algorithm>
#include <bitset>
#include <cctype>
#include <cstddef>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgc/space.hpp"

namespace pgc {

/// A signed factor, e.g. h+ or p±^!. There are 8 x 12 = 96 atoms.
struct Atom {
  Factor factor = Factor::h;
  Signature signature = Signature::zero;

  static constexpr std::size_t kCount = kFactorCount * kSignatureCount;

  constexpr std::size_t index() const { return index_of(factor) * kSignatureCount + index_of(signature); }

  static constexpr Atom from_index(std::size_t i) {
    return Atom{kAllFactors[i / kSignatureCount], kAllSignatures[i % kSignatureCount]};
  }

  friend constexpr bool operator==(Atom, Atom) = default;
  friend constexpr auto operator<=>(Atom, Atom) = default;
};

/// Valuation in which exactly the member atoms are true.
using AtomSet = std::bitset<Atom::kCount>;

inline AtomSet atoms_of(const SzondiProfile& p) {
  AtomSet out;
  for (Factor f : kAllFactors) out.set(Atom{f, p[f]}.index());
  return out;
}

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

class ModelBoundExceeded : public FormulaError {
 public:
  using FormulaError::FormulaError;
};

/// Negation-free propositional formula over signed-factor atoms. Immutable;
/// children are shared between copies.
class Formula {
 public:
  enum class Kind { top, bottom, atom, conj, disj };

  Formula() = default;  // top

  static Formula top() { return Formula(Kind::top); }
  static Formula bottom() { return Formula(Kind::bottom); }
  static Formula atom(Atom a) {
    Formula f(Kind::atom);
    f.atom_ = a;
    return f;
  }
  static Formula atom(Factor g, Signature s) { return atom(Atom{g, s}); }

  /// Empty conjunction is top; a single conjunct is returned as is.
  static Formula conj(std::vector<Formula> children) { return junction(Kind::conj, std::move(children)); }
  /// Empty disjunction is bottom; a single disjunct is returned as is.
  static Formula disj(std::vector<Formula> children) { return junction(Kind::disj, std::move(children)); }

  Kind kind() const { return kind_; }
  bool is(Kind k) const { return kind_ == k; }
  Atom as_atom() const { return atom_; }

  std::span<const Formula> children() const {
    if (!children_) return {};
    return {children_->data(), children_->size()};
  }

  /// Structural equality (child order matters).
  friend bool operator==(const Formula& a, const Formula& b) {
    if (a.kind_ != b.kind_) return false;
    if (a.kind_ == Kind::atom) return a.atom_ == b.atom_;
    if (a.kind_ == Kind::top || a.kind_ == Kind::bottom) return true;
    if (a.children_ == b.children_) return true;
    return std::ranges::equal(a.children(), b.children());
  }

 private:
  explicit Formula(Kind k) : kind_(k) {}

  static Formula junction(Kind k, std::vector<Formula> children) {
    if (children.empty()) return k == Kind::conj ? top() : bottom();
    if (children.size() == 1) return std::move(children.front());
    Formula f(k);
    f.children_ = std::make_shared<const std::vector<Formula>>(std::move(children));
    return f;
  }

  Kind kind_ = Kind::top;
  Atom atom_{};
  std::shared_ptr<const std::vector<Formula>> children_;
};

inline Formula operator&&(const Formula& a, const Formula& b) { return Formula::conj({a, b}); }
inline Formula operator||(const Formula& a, const Formula& b) { return Formula::disj({a, b}); }

// ---------------------------------------------------------------------------
// Evaluation

inline bool eval(const Formula& phi, const AtomSet& valuation) {
  switch (phi.kind()) {
    case Formula::Kind::top: return true;
    case Formula::Kind::bottom: return false;
    case Formula::Kind::atom: return valuation.test(phi.as_atom().index());
    case Formula::Kind::conj:
      return std::ranges::all_of(phi.children(), [&](const Formula& c) { return eval(c, valuation); });
    case Formula::Kind::disj:
      return std::ranges::any_of(phi.children(), [&](const Formula& c) { return eval(c, valuation); });
  }
  return false;
}

/// Truth under the valuation making exactly the profile's 8 atoms true.
inline bool eval(const Formula& phi, const SzondiProfile& p) { return eval(phi, atoms_of(p)); }

inline void collect_atoms(const Formula& phi, AtomSet& out) {
  if (phi.is(Formula::Kind::atom)) {
    out.set(phi.as_atom().index());
    return;
  }
  for (const Formula& c : phi.children()) collect_atoms(c, out);
}

inline AtomSet atoms_of(const Formula& phi) {
  AtomSet out;
  collect_atoms(phi, out);
  return out;
}

// ---------------------------------------------------------------------------
// Minimal models

inline constexpr std::size_t kDefaultModelBound = 1'000'000;

namespace detail {

inline bool bitset_less(const AtomSet& a, const AtomSet& b) {
  for (std::size_t i = Atom::kCount; i-- > 0;) {
    if (a[i] != b[i]) return b[i];
  }
  return false;
}

inline void sort_unique(std::vector<AtomSet>& sets) {
  std::ranges::sort(sets, bitset_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

/// Keeps only the inclusion-minimal sets.
inline std::vector<AtomSet> minimize(std::vector<AtomSet> sets) {
  sort_unique(sets);
  std::ranges::stable_sort(sets, {}, [](const AtomSet& s) { return s.count(); });
  std::vector<AtomSet> kept;
  for (const AtomSet& s : sets) {
    bool dominated = std::ranges::any_of(kept, [&](const AtomSet& k) { return (k & ~s).none(); });
    if (!dominated) kept.push_back(s);
  }
  std::ranges::sort(kept, bitset_less);
  return kept;
}

inline void check_bound(std::size_t n, std::size_t bound) {
  if (n > bound) {
    throw ModelBoundExceeded("minimal-model expansion exceeds bound of " + std::to_string(bound));
  }
}

// Candidate model sets that may contain non-minimal members; minimized once
// by the caller.
inline std::vector<AtomSet> models(const Formula& phi, std::size_t bound) {
  switch (phi.kind()) {
    case Formula::Kind::top: return {AtomSet{}};
    case Formula::Kind::bottom: return {};
    case Formula::Kind::atom: {
      AtomSet s;
      s.set(phi.as_atom().index());
      return {s};
    }
    case Formula::Kind::disj: {
      std::vector<AtomSet> out;
      for (const Formula& c : phi.children()) {
        auto sub = models(c, bound);
        out.insert(out.end(), sub.begin(), sub.end());
        check_bound(out.size(), bound);
      }
      sort_unique(out);
      return out;
    }
    case Formula::Kind::conj: {
      std::vector<AtomSet> acc{AtomSet{}};
      for (const Formula& c : phi.children()) {
        auto sub = models(c, bound);
        if (sub.empty()) return {};
        if (sub.size() == 1) {
          for (AtomSet& m : acc) m |= sub.front();
        } else {
          check_bound(acc.size() * sub.size(), bound);
          std::vector<AtomSet> next;
          next.reserve(acc.size() * sub.size());
          for (const AtomSet& m : acc) {
            for (const AtomSet& n : sub) next.push_back(m | n);
          }
          acc = std::move(next);
        }
        sort_unique(acc);
      }
      return acc;
    }
  }
  return {};
}

}  // namespace detail

/// The inclusion-minimal atom sets whose valuation satisfies phi, in a
/// fixed order. Throws ModelBoundExceeded when any intermediate candidate
/// set grows beyond `bound`.
inline std::vector<AtomSet> minimal_models(const Formula& phi, std::size_t bound = kDefaultModelBound) {
  return detail::minimize(detail::models(phi, bound));
}

/// Caches the minimal models of a premise for repeated entailment checks.
class Entailer {
 public:
  explicit Entailer(const Formula& premise, std::size_t bound = kDefaultModelBound)
      : models_(minimal_models(premise, bound)) {}

  /// For monotone formulas, sigma => phi iff phi holds in every minimal
  /// model of sigma.
  bool entails(const Formula& phi) const {
    return std::ranges::all_of(models_, [&](const AtomSet& m) { return eval(phi, m); });
  }

  const std::vector<AtomSet>& models() const { return models_; }

 private:
  std::vector<AtomSet> models_;
};

inline bool entails(const Formula& sigma, const Formula& phi, std::size_t bound = kDefaultModelBound) {
  return Entailer(sigma, bound).entails(phi);
}

inline bool equivalent(const Formula& a, const Formula& b, std::size_t bound = kDefaultModelBound) {
  return entails(a, b, bound) && entails(b, a, bound);
}

// ---------------------------------------------------------------------------
// Canonical form: nested same-kind junctions flattened, children sorted by
// their printed form and deduplicated, unary junctions collapsed.

inline std::string to_sexpr(const Formula& phi);

inline Formula canonical(const Formula& phi) {
  if (!phi.is(Formula::Kind::conj) && !phi.is(Formula::Kind::disj)) return phi;
  std::vector<std::pair<std::string, Formula>> keyed;
  auto absorb = [&](auto&& self, const Formula& node) -> void {
    for (const Formula& c : node.children()) {
      Formula cc = canonical(c);
      if (cc.kind() == phi.kind()) {
        self(self, cc);
      } else {
        keyed.emplace_back(to_sexpr(cc), std::move(cc));
      }
    }
  };
  absorb(absorb, phi);
  std::ranges::sort(keyed, {}, &std::pair<std::string, Formula>::first);
  keyed.erase(std::unique(keyed.begin(), keyed.end(),
                          [](const auto& a, const auto& b) { return a.first == b.first; }),
              keyed.end());
  std::vector<Formula> children;
  for (auto& [key, f] : keyed) children.push_back(std::move(f));
  return phi.is(Formula::Kind::conj) ? Formula::conj(std::move(children))
                                     : Formula::disj(std::move(children));
}

// ---------------------------------------------------------------------------
// S-expression text form
//
//   formula := "(top)" | "(bot)" | "(atom " factor " " sig ")"
//            | "(and " formula+ ")" | "(or " formula+ ")"

inline void write_sexpr(const Formula& phi, std::string& out) {
  switch (phi.kind()) {
    case Formula::Kind::top: out += "(top)"; return;
    case Formula::Kind::bottom: out += "(bot)"; return;
    case Formula::Kind::atom:
      out += "(atom ";
      out += to_token(phi.as_atom().factor);
      out += ' ';
      out += to_token(phi.as_atom().signature);
      out += ')';
      return;
    case Formula::Kind::conj:
    case Formula::Kind::disj:
      out += phi.is(Formula::Kind::conj) ? "(and" : "(or";
      for (const Formula& c : phi.children()) {
        out += ' ';
        write_sexpr(c, out);
      }
      out += ')';
      return;
  }
}

inline std::string to_sexpr(const Formula& phi) {
  std::string out;
  write_sexpr(phi, out);
  return out;
}

namespace detail {

class SexprParser {
 public:
  explicit SexprParser(std::string_view text) : text_(text) {}

  Formula parse_all() {
    Formula f = parse();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  Formula parse() {
    expect('(');
    std::string_view head = word();
    if (head == "top") {
      expect(')');
      return Formula::top();
    }
    if (head == "bot") {
      expect(')');
      return Formula::bottom();
    }
    if (head == "atom") {
      std::string_view ftok = word();
      std::string_view stok = word();
      auto f = factor_from_token(ftok);
      if (!f) fail("unknown factor '" + std::string(ftok) + "'");
      auto s = signature_from_token(stok);
      if (!s) fail("unknown signature '" + std::string(stok) + "'");
      expect(')');
      return Formula::atom(*f, *s);
    }
    if (head == "and" || head == "or") {
      std::vector<Formula> children;
      while (true) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ')') break;
        children.push_back(parse());
      }
      expect(')');
      if (children.empty()) fail("'" + std::string(head) + "' needs at least one operand");
      return head == "and" ? Formula::conj(std::move(children)) : Formula::disj(std::move(children));
    }
    fail("unknown head '" + std::string(head) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (start == pos_) fail("expected a token");
    return text_.substr(start, pos_ - start);
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("formula parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_sexpr(std::string_view text) { return detail::SexprParser(text).parse_all(); }

}  // namespace pgc
