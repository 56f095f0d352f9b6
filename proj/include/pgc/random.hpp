#pragma once

#include <bit>
#include <cstddef>
#include <random>
#include <vector>

#include "pgc/box.hpp"
#include "pgc/galois.hpp"
#include "pgc/space.hpp"

namespace pgc {

using Rng = std::mt19937_64;

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

/// Uniform member of a non-empty box.
template <class Space>
Profile<Space> random_member(const Box<Space>& box, Rng& rng) {
  std::array<typename Space::Value, Space::kDimensions> values{};
  for (std::size_t i = 0; i < Space::kDimensions; ++i) {
    auto choices = box.allowed(Space::dimension(i));
    values[i] = choices[uniform_index(rng, choices.size())];
  }
  return Profile<Space>(values);
}

inline SzondiProfile random_spp(Rng& rng) { return random_member(FactorBox::full(), rng); }
inline CattellProfile random_ppp(Rng& rng) { return random_member(TraitBox::full(), rng); }

/// Signatures restricted to {-, 0, +}.
inline FactorBox coarse_spp_box() {
  using S = Signature;
  FactorBox b;
  for (Factor g : kAllFactors) b.set(g, FactorBox::mask_of({S::minus, S::zero, S::plus}));
  return b;
}

/// A Cattell profile with a non-empty right image, found by a random walk
/// from a profile whose image is the all-zero Szondi profile.
inline CattellProfile consistent_ppp(Rng& rng, const GaloisConnection& conn, std::size_t steps = 40) {
  CattellProfile f = CattellProfile::uniform(TraitValue(5)).with(TraitId::LE, TraitValue(9));
  for (std::size_t i = 0; i < steps; ++i) {
    TraitId t = kAllTraits[uniform_index(rng, kTraitCount)];
    CattellProfile candidate = f.with(t, TraitValue::from_index(uniform_index(rng, TraitValue::kCount)));
    if (!conn.right(candidate).is_empty()) f = candidate;
  }
  return f;
}

/// 0..max_size Cattell profiles. Roughly half the draws are seeded from a
/// common consistent profile so that the set has a non-empty right image.
inline std::vector<CattellProfile> random_ppp_set(Rng& rng, const GaloisConnection& conn,
                                                  std::size_t max_size) {
  std::size_t n = uniform_index(rng, max_size + 1);
  std::vector<CattellProfile> out;
  if (coin(rng)) {
    CattellProfile base = consistent_ppp(rng, conn);
    SzondiProfile witness = random_member(conn.right(base), rng);
    TraitBox compatible = conn.left(witness);
    for (std::size_t i = 0; i < n; ++i) out.push_back(random_member(compatible, rng));
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(coin(rng) ? consistent_ppp(rng, conn) : random_ppp(rng));
    }
  }
  return out;
}

/// 0..max_size Szondi profiles, drawn from the full space, the {-,0,+}
/// subspace, or the right image of a consistent Cattell profile.
inline std::vector<SzondiProfile> random_spp_set(Rng& rng, const GaloisConnection& conn,
                                                 std::size_t max_size) {
  std::size_t n = uniform_index(rng, max_size + 1);
  std::vector<SzondiProfile> out;
  switch (uniform_index(rng, 3)) {
    case 0:
      for (std::size_t i = 0; i < n; ++i) out.push_back(random_spp(rng));
      break;
    case 1:
      for (std::size_t i = 0; i < n; ++i) out.push_back(random_member(coarse_spp_box(), rng));
      break;
    default: {
      FactorBox image = conn.right(consistent_ppp(rng, conn));
      for (std::size_t i = 0; i < n; ++i) out.push_back(random_member(image, rng));
    }
  }
  return out;
}

/// Random sub-multiset keeping each element with probability 1/2.
template <class T>
std::vector<T> random_subset(const std::vector<T>& items, Rng& rng) {
  std::vector<T> out;
  for (const T& x : items) {
    if (coin(rng)) out.push_back(x);
  }
  return out;
}

}  // namespace pgc
