#include "pgc/signature.hpp"
#include "pgc/space.hpp"

#include <set>

#include "gtest/gtest.h"

namespace pgc {
namespace {

using S = Signature;

TEST(Signature, TwelveDistinctTokens) {
  std::set<std::string_view> tokens(kSignatureTokens.begin(), kSignatureTokens.end());
  EXPECT_EQ(tokens.size(), 12u);
  for (Signature s : kAllSignatures) EXPECT_EQ(signature_from_token(to_token(s)), s);
  EXPECT_FALSE(signature_from_token("+!!!!").has_value());
  EXPECT_FALSE(signature_from_token("±").has_value());
}

TEST(Signature, LeqExamples) {
  EXPECT_TRUE(signature_leq(S::minus2, S::plus1));
  EXPECT_TRUE(signature_leq(S::pm, S::pm));
  EXPECT_FALSE(signature_leq(S::pm_lower, S::zero));
  EXPECT_FALSE(signature_leq(S::zero, S::pm_lower));
  EXPECT_TRUE(signature_leq(S::pm_lower, S::pm_upper));
  EXPECT_FALSE(signature_leq(S::plus3, S::pm_upper));
}

TEST(Signature, LeqIsAPartialOrder) {
  for (Signature a : kAllSignatures) {
    EXPECT_TRUE(signature_leq(a, a));
    for (Signature b : kAllSignatures) {
      if (signature_leq(a, b) && signature_leq(b, a)) {
        EXPECT_EQ(a, b);
      }
      for (Signature c : kAllSignatures) {
        if (signature_leq(a, b) && signature_leq(b, c)) {
          EXPECT_TRUE(signature_leq(a, c));
        }
      }
    }
  }
}

TEST(Signature, FiftyOneComparablePairs) {
  int count = 0;
  for (Signature a : kAllSignatures) {
    for (Signature b : kAllSignatures) count += signature_leq(a, b) ? 1 : 0;
  }
  EXPECT_EQ(count, 9 * 10 / 2 + 3 * 4 / 2);
}

TEST(Signature, HasseCoversAreTheDrawnEdges) {
  // a is covered by b iff a < b with nothing strictly between.
  int covers = 0;
  for (Signature a : kAllSignatures) {
    for (Signature b : kAllSignatures) {
      if (a == b || !signature_leq(a, b)) continue;
      bool between = false;
      for (Signature c : kAllSignatures) {
        if (c != a && c != b && signature_leq(a, c) && signature_leq(c, b)) between = true;
      }
      covers += between ? 0 : 1;
    }
  }
  EXPECT_EQ(covers, 8 + 2);
}

TEST(Signature, FlipExamples) {
  EXPECT_EQ(signature_flip(S::plus1), S::minus1);
  EXPECT_EQ(signature_flip(S::zero), S::zero);
  EXPECT_EQ(signature_flip(S::pm_upper), S::pm_lower);
  EXPECT_EQ(signature_flip(S::pm), S::pm);
  EXPECT_EQ(signature_flip(S::plus2), S::minus2);
  EXPECT_EQ(signature_flip(S::minus3), S::plus3);
}

TEST(Signature, FlipIsAnInvolutiveAntiAutomorphism) {
  for (Signature a : kAllSignatures) {
    EXPECT_EQ(signature_flip(signature_flip(a)), a);
    for (Signature b : kAllSignatures) {
      EXPECT_EQ(signature_leq(a, b), signature_leq(signature_flip(b), signature_flip(a)));
    }
  }
}

TEST(Space, FactorsAndVectors) {
  EXPECT_EQ(kAllFactors.size(), 8u);
  EXPECT_EQ(vector_of(Factor::h), Vector::S);
  EXPECT_EQ(vector_of(Factor::s), Vector::S);
  EXPECT_EQ(vector_of(Factor::e), Vector::P);
  EXPECT_EQ(vector_of(Factor::hy), Vector::P);
  EXPECT_EQ(vector_of(Factor::k), Vector::Sch);
  EXPECT_EQ(vector_of(Factor::p), Vector::Sch);
  EXPECT_EQ(vector_of(Factor::d), Vector::C);
  EXPECT_EQ(vector_of(Factor::m), Vector::C);
}

TEST(Space, TwentyEightTraits) {
  std::set<std::string_view> tokens(kTraitTokens.begin(), kTraitTokens.end());
  EXPECT_EQ(tokens.size(), 28u);
  int normal = 0;
  for (TraitId t : kAllTraits) {
    EXPECT_EQ(trait_from_token(to_token(t)), t);
    normal += kind_of(t) == TraitKind::normal ? 1 : 0;
  }
  EXPECT_EQ(normal, 16);
  EXPECT_EQ(kind_of(TraitId::Q4), TraitKind::normal);
  EXPECT_EQ(kind_of(TraitId::PS), TraitKind::abnormal);
}

TEST(Space, TraitValueRange) {
  EXPECT_THROW(TraitValue(0), std::out_of_range);
  EXPECT_THROW(TraitValue(11), std::out_of_range);
  EXPECT_FALSE(TraitValue(5).high_range());
  EXPECT_TRUE(TraitValue(6).high_range());
  for (int v = 1; v <= 10; ++v) EXPECT_EQ(TraitValue::from_index(TraitValue(v).index()).value(), v);
}

}  // namespace
}  // namespace pgc
