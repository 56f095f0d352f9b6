#include "pgc/formula.hpp"

#include <vector>

#include "gtest/gtest.h"
#include "pgc/random.hpp"
#include "pgc/translation.hpp"

namespace pgc {
namespace {

using S = Signature;
using F = Formula;

F at(Factor g, S s) { return F::atom(g, s); }

AtomSet set_of(std::initializer_list<Atom> atoms) {
  AtomSet out;
  for (Atom a : atoms) out.set(a.index());
  return out;
}

// Truth-table entailment over the atoms that occur in either formula:
// every valuation that satisfies sigma satisfies phi.
bool truth_table_entails(const F& sigma, const F& phi) {
  AtomSet used = atoms_of(sigma) | atoms_of(phi);
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < Atom::kCount; ++i) {
    if (used.test(i)) idx.push_back(i);
  }
  EXPECT_LE(idx.size(), 16u);
  for (std::uint32_t bits = 0; bits < (1u << idx.size()); ++bits) {
    AtomSet v;
    for (std::size_t j = 0; j < idx.size(); ++j) {
      if (bits & (1u << j)) v.set(idx[j]);
    }
    if (eval(sigma, v) && !eval(phi, v)) return false;
  }
  return true;
}

F random_formula(Rng& rng, const std::vector<Atom>& alphabet, int depth) {
  std::size_t pick = uniform_index(rng, depth == 0 ? 12 : 16);
  if (pick == 0) return F::top();
  if (pick == 1) return F::bottom();
  if (pick < 12) return F::atom(alphabet[uniform_index(rng, alphabet.size())]);
  std::vector<F> children;
  std::size_t n = 1 + uniform_index(rng, 3);
  for (std::size_t i = 0; i < n; ++i) children.push_back(random_formula(rng, alphabet, depth - 1));
  return pick % 2 ? F::conj(std::move(children)) : F::disj(std::move(children));
}

std::vector<Atom> random_alphabet(Rng& rng, std::size_t n) {
  std::vector<Atom> out;
  while (out.size() < n) {
    Atom a = Atom::from_index(uniform_index(rng, Atom::kCount));
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
  }
  return out;
}

TEST(Formula, AtomAlphabet) {
  EXPECT_EQ(Atom::kCount, 96u);
  for (std::size_t i = 0; i < Atom::kCount; ++i) EXPECT_EQ(Atom::from_index(i).index(), i);
}

TEST(Formula, JunctionConventions) {
  EXPECT_EQ(F::conj({}), F::top());
  EXPECT_EQ(F::disj({}), F::bottom());
  EXPECT_EQ(F::conj({at(Factor::h, S::plus)}), at(Factor::h, S::plus));
  EXPECT_TRUE(F::conj({at(Factor::h, S::plus), at(Factor::s, S::plus)}).is(F::Kind::conj));
}

TEST(Formula, EvalExamples) {
  const SzondiProfile norm = norm_profile();
  EXPECT_TRUE(eval(at(Factor::h, S::plus), norm));
  EXPECT_TRUE(eval(F::top(), norm));
  EXPECT_FALSE(eval(F::bottom(), norm));
  EXPECT_FALSE(eval(at(Factor::k, S::minus) && at(Factor::p, S::plus), norm));
  EXPECT_TRUE(eval(at(Factor::p, S::plus) || at(Factor::p, S::minus), norm));
}

TEST(Formula, MinimalModelExamples) {
  EXPECT_EQ(minimal_models(at(Factor::h, S::plus)), std::vector<AtomSet>{set_of({{Factor::h, S::plus}})});

  auto models = minimal_models(at(Factor::s, S::plus1) || at(Factor::s, S::minus1));
  ASSERT_EQ(models.size(), 2u);
  EXPECT_NE(std::find(models.begin(), models.end(), set_of({{Factor::s, S::plus1}})), models.end());
  EXPECT_NE(std::find(models.begin(), models.end(), set_of({{Factor::s, S::minus1}})), models.end());

  EXPECT_TRUE(minimal_models(F::bottom()).empty());
  EXPECT_EQ(minimal_models(F::top()), std::vector<AtomSet>{AtomSet{}});
}

TEST(Formula, MinimalModelsDropSupersets) {
  // (a or (a and b)) has the single minimal model {a}
  F a = at(Factor::h, S::plus);
  F b = at(Factor::s, S::plus);
  auto models = minimal_models(a || (a && b));
  EXPECT_EQ(models, std::vector<AtomSet>{set_of({{Factor::h, S::plus}})});
}

TEST(Formula, MinimalModelBound) {
  // 10 binary disjunctions conjoined: 1024 minimal models
  std::vector<F> parts;
  for (std::size_t i = 0; i < 10; ++i) {
    parts.push_back(F::atom(Atom::from_index(2 * i)) || F::atom(Atom::from_index(2 * i + 1)));
  }
  F phi = F::conj(parts);
  EXPECT_EQ(minimal_models(phi).size(), 1024u);
  EXPECT_THROW(minimal_models(phi, 1000), ModelBoundExceeded);
  EXPECT_THROW(entails(phi, F::top(), 1000), ModelBoundExceeded);
}

TEST(Formula, EntailmentExamples) {
  F hp = at(Factor::h, S::plus);
  EXPECT_TRUE(entails(hp && at(Factor::s, S::plus), hp));
  EXPECT_TRUE(entails(hp, hp || at(Factor::h, S::minus)));
  EXPECT_FALSE(entails(spp_formula(norm_profile()), trait_formula(TraitId::B, TraitValue(7))));
  EXPECT_TRUE(entails(F::bottom(), hp));
  EXPECT_TRUE(entails(hp, F::top()));
  EXPECT_FALSE(entails(F::top(), hp));
}

TEST(Formula, EquivalenceExamples) {
  EXPECT_TRUE(equivalent(F::top(), F::conj({})));
  EXPECT_FALSE(equivalent(at(Factor::h, S::plus), at(Factor::h, S::plus1)));
  EXPECT_TRUE(equivalent(trait_formula(TraitId::A, TraitValue(3)), trait_formula(TraitId::A, TraitValue(4))));
  F a = at(Factor::h, S::plus);
  F b = at(Factor::s, S::minus);
  EXPECT_TRUE(equivalent(a && b, b && a));
  EXPECT_TRUE(equivalent(a || (a && b), a));
}

TEST(Formula, EntailsAgreesWithTruthTables) {
  Rng rng(2024);
  for (int trial = 0; trial < 400; ++trial) {
    auto alphabet = random_alphabet(rng, 4 + uniform_index(rng, 12));
    F sigma = random_formula(rng, alphabet, 3);
    F phi = random_formula(rng, alphabet, 3);
    ASSERT_EQ(entails(sigma, phi), truth_table_entails(sigma, phi))
        << to_sexpr(sigma) << " => " << to_sexpr(phi);
  }
}

TEST(Formula, EntailsIsAPreorder) {
  Rng rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    auto alphabet = random_alphabet(rng, 5);
    F a = random_formula(rng, alphabet, 2);
    F b = random_formula(rng, alphabet, 2);
    F c = random_formula(rng, alphabet, 2);
    EXPECT_TRUE(entails(a, a));
    if (entails(a, b) && entails(b, c)) {
      EXPECT_TRUE(entails(a, c));
    }
  }
}

TEST(Formula, ProfileEntailmentIsEvaluation) {
  Rng rng(5);
  std::vector<Atom> alphabet;
  for (std::size_t i = 0; i < Atom::kCount; ++i) alphabet.push_back(Atom::from_index(i));
  for (int trial = 0; trial < 500; ++trial) {
    SzondiProfile p = random_spp(rng);
    F phi = random_formula(rng, alphabet, 3);
    if (coin(rng)) phi = ppp_formula(random_ppp(rng));
    EXPECT_EQ(entails(spp_formula(p), phi), eval(phi, p));
  }
}

TEST(Formula, SexprRoundTrip) {
  Rng rng(17);
  std::vector<Atom> alphabet;
  for (std::size_t i = 0; i < Atom::kCount; ++i) alphabet.push_back(Atom::from_index(i));
  for (int trial = 0; trial < 300; ++trial) {
    F phi = random_formula(rng, alphabet, 4);
    EXPECT_EQ(parse_sexpr(to_sexpr(phi)), phi);
  }
}

TEST(Formula, SexprText) {
  F phi = at(Factor::h, S::plus) && (at(Factor::s, S::plus1) || at(Factor::s, S::minus1));
  EXPECT_EQ(to_sexpr(phi), "(and (atom h +) (or (atom s +!) (atom s -!)))");
  EXPECT_EQ(to_sexpr(F::top()), "(top)");
  EXPECT_EQ(to_sexpr(F::bottom()), "(bot)");
  EXPECT_EQ(parse_sexpr("  (and (atom k pm_!)\n (atom p pm^!))"), at(Factor::k, S::pm_lower) && at(Factor::p, S::pm_upper));
}

TEST(Formula, SexprErrors) {
  EXPECT_THROW(parse_sexpr("(atom x +)"), ParseError);
  EXPECT_THROW(parse_sexpr("(atom h ++)"), ParseError);
  EXPECT_THROW(parse_sexpr("(and)"), ParseError);
  EXPECT_THROW(parse_sexpr("(not (atom h +))"), ParseError);
  EXPECT_THROW(parse_sexpr("(top) (top)"), ParseError);
  EXPECT_THROW(parse_sexpr("(atom h +"), ParseError);
}

TEST(Formula, CanonicalFormIgnoresOrderAndNesting) {
  F a = at(Factor::h, S::plus);
  F b = at(Factor::s, S::minus);
  F c = at(Factor::k, S::zero);
  EXPECT_EQ(canonical(F::conj({a, F::conj({c, b})})), canonical(F::conj({b, a, c})));
  EXPECT_EQ(canonical(F::disj({a, a})), a);
  EXPECT_NE(canonical(a && b), canonical(a || b));
}

}  // namespace
}  // namespace pgc
