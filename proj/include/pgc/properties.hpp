#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pgc/formula.hpp"
#include "pgc/galois.hpp"
#include "pgc/random.hpp"
#include "pgc/translation.hpp"

namespace pgc {

inline std::string describe(const SzondiProfile& p) {
  std::string out = "(";
  for (Factor g : kAllFactors) {
    if (g != Factor::h) out += ' ';
    out += to_token(g);
    out += to_token(p[g]);
  }
  return out + ")";
}

inline std::string describe(const CattellProfile& f) {
  std::string out = "(";
  for (TraitId t : kAllTraits) {
    if (t != TraitId::A) out += ' ';
    out += to_token(t);
    out += '=';
    out += std::to_string(f[t].value());
  }
  return out + ")";
}

template <class T>
std::string describe(const std::vector<T>& items) {
  std::string out = "{";
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += describe(items[i]);
  }
  return out + "}";
}

struct PropertyResult {
  std::string name;
  std::size_t trials = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample; }
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  bool passed() const {
    for (const auto& r : results) {
      if (!r.passed()) return false;
    }
    return true;
  }

  void print(std::ostream& os) const {
    for (const auto& r : results) {
      if (r.passed()) {
        os << "PASS " << r.name << " (" << r.trials << " trials)\n";
      } else {
        os << "FAIL " << r.name << " after " << r.trials << " trials\n"
           << "  counterexample: " << *r.counterexample << '\n';
      }
    }
  }
};

namespace detail {

/// Greedily drops elements of either set while the failure persists.
template <class A, class B, class Fails>
void shrink_pair(std::vector<A>& a, std::vector<B>& b, Fails&& fails) {
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto trial = a;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (fails(trial, b)) {
        a = std::move(trial);
        progress = true;
        break;
      }
    }
    for (std::size_t i = 0; !progress && i < b.size(); ++i) {
      auto trial = b;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (fails(a, trial)) {
        b = std::move(trial);
        progress = true;
      }
    }
  }
}

template <class T>
bool is_sub_multiset(const std::vector<T>& small, const std::vector<T>& big) {
  std::vector<T> pool = big;
  for (const T& x : small) {
    auto it = std::find(pool.begin(), pool.end(), x);
    if (it == pool.end()) return false;
    pool.erase(it);
  }
  return true;
}

template <class T>
std::vector<T> concat(std::vector<T> a, const std::vector<T>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Structural checks on a table. Each returns a counterexample description.

/// Cells at values 3/4, 5/6 and 7/8 must be logically equivalent.
inline std::optional<std::string> check_column_collapse(const TranslationTable& table) {
  for (TraitId t : kAllTraits) {
    for (int v : {3, 5, 7}) {
      const Formula& a = table.cell(t, TraitValue(v));
      const Formula& b = table.cell(t, TraitValue(v + 1));
      if (!equivalent(a, b)) {
        return std::string(to_token(t)) + ": value " + std::to_string(v) + " " + to_sexpr(a) +
               " is not equivalent to value " + std::to_string(v + 1) + " " + to_sexpr(b);
      }
    }
  }
  return std::nullopt;
}

/// Traits whose low-range cells are the signature-flipped high-range cells.
inline const std::vector<TraitId>& symmetric_traits() {
  using T = TraitId;
  static const std::vector<TraitId> traits = {
      T::A,  T::B,  T::C,  T::E,  T::F,  T::G,  T::H,  T::I,  T::L,  T::M,  T::N,  T::O,
      T::Q1, T::Q2, T::Q4, T::PS, T::HC, T::ST, T::AD, T::SR, T::AW, T::TS, T::TI,
  };
  return traits;
}

inline std::optional<std::string> check_polarity_symmetry(const TranslationTable& table) {
  for (TraitId t : symmetric_traits()) {
    for (int k = 1; k <= 4; ++k) {
      auto low = box_of(table.cell(t, TraitValue(k)));
      auto high = box_of(table.cell(t, TraitValue(11 - k)));
      if (!low || !high || !(*low == flip(*high))) {
        return std::string(to_token(t)) + ": value " + std::to_string(k) + " is not the flip of value " +
               std::to_string(11 - k);
      }
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> check_box_representable(const TranslationTable& table) {
  for (TraitId t : kAllTraits) {
    for (std::size_t j = 0; j < TraitValue::kCount; ++j) {
      TraitValue v = TraitValue::from_index(j);
      if (!box_of(table.cell(t, v))) {
        return std::string(to_token(t)) + "," + std::to_string(v.value()) + " has no box form";
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Randomized suites

struct PropertyOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::size_t max_set_size = 3;
};

/// Runs every property suite against one table. With zero trials nothing
/// runs and the report is empty.
inline PropertyReport run_property_suites(const TranslationTable& table, const PropertyOptions& opts) {
  PropertyReport report;
  if (opts.trials == 0) return report;

  auto structural = [&](std::string name, std::optional<std::string> cx) {
    report.results.push_back({std::move(name), 1, std::move(cx)});
  };
  structural("table: cells have box form", check_box_representable(table));
  if (!report.passed()) return report;
  structural("table: column collapse 3=4, 5=6, 7=8", check_column_collapse(table));
  structural("table: low range is flipped high range", check_polarity_symmetry(table));

  const GaloisConnection conn(table);
  Rng rng(opts.seed);
  const std::size_t n = opts.max_set_size;

  using FSet = std::vector<CattellProfile>;
  using PSet = std::vector<SzondiProfile>;

  auto pair_suite = [&](std::string name, auto gen, auto fails) {
    PropertyResult r{std::move(name), 0, std::nullopt};
    for (std::size_t i = 0; i < opts.trials; ++i) {
      ++r.trials;
      auto [F, P] = gen();
      if (fails(F, P)) {
        detail::shrink_pair(F, P, fails);
        r.counterexample = "F=" + describe(F) + " P=" + describe(P);
        break;
      }
    }
    report.results.push_back(std::move(r));
  };

  auto random_pair = [&] { return std::pair{random_ppp_set(rng, conn, n), random_spp_set(rng, conn, n)}; };

  pair_suite("Galois: P <= right(F) iff F <= left(P)", random_pair, [&](const FSet& F, const PSet& P) {
    const FactorBox r = conn.right(F);
    const TraitBox l = conn.left(P);
    bool lhs = std::ranges::all_of(P, [&](const SzondiProfile& p) { return r.contains(p); });
    bool rhs = std::ranges::all_of(F, [&](const CattellProfile& f) { return l.contains(f); });
    return lhs != rhs;
  });

  // Nested pairs are encoded as (small, extra) with big = small + extra.
  auto nested_ppp = [&] {
    FSet big = random_ppp_set(rng, conn, n);
    FSet small = random_subset(big, rng);
    return std::pair{small, big};
  };
  auto nested_spp = [&] {
    PSet big = random_spp_set(rng, conn, n);
    PSet small = random_subset(big, rng);
    return std::pair{small, big};
  };

  pair_suite("right is antitone", nested_ppp, [&](const FSet& small, const FSet& big) {
    return detail::is_sub_multiset(small, big) && !conn.right(big).subset_of(conn.right(small));
  });
  pair_suite("left is antitone", nested_spp, [&](const PSet& small, const PSet& big) {
    return detail::is_sub_multiset(small, big) && !conn.left(big).subset_of(conn.left(small));
  });

  auto single_spp = [&] { return std::pair{FSet{}, random_spp_set(rng, conn, n)}; };
  auto single_ppp = [&] { return std::pair{random_ppp_set(rng, conn, n), PSet{}}; };

  pair_suite("right . left is inflationary", single_spp, [&](const FSet&, const PSet& P) {
    const FactorBox c = conn.closure_spp(P);
    return !std::ranges::all_of(P, [&](const SzondiProfile& p) { return c.contains(p); });
  });
  pair_suite("left . right is inflationary", single_ppp, [&](const FSet& F, const PSet&) {
    const TraitBox c = conn.closure_ppp(F);
    return !std::ranges::all_of(F, [&](const CattellProfile& f) { return c.contains(f); });
  });
  pair_suite("right . left . right = right", single_ppp, [&](const FSet& F, const PSet&) {
    return !(conn.right(conn.left(conn.right(F))) == conn.right(F));
  });

  auto two_ppp = [&] { return std::pair{random_ppp_set(rng, conn, n), random_ppp_set(rng, conn, n)}; };
  pair_suite("right(F1 u F2) = right(F1) n right(F2)", two_ppp, [&](const FSet& a, const FSet& b) {
    return !(conn.right(detail::concat(a, b)) == intersect(conn.right(a), conn.right(b)));
  });

  pair_suite("f is monotone: F <= F' implies f(F') => f(F)", nested_ppp,
             [&](const FSet& small, const FSet& big) {
               return detail::is_sub_multiset(small, big) &&
                      !entails(ppp_set_formula(big, table), ppp_set_formula(small, table));
             });
  pair_suite("p is monotone: P <= P' implies p(P) => p(P')", nested_spp,
             [&](const PSet& small, const PSet& big) {
               return detail::is_sub_multiset(small, big) &&
                      !entails(spp_set_formula(small), spp_set_formula(big));
             });

  pair_suite("p is injective", [&] { return std::pair{FSet{}, PSet{random_spp(rng), random_spp(rng)}}; },
             [&](const FSet&, const PSet& P) {
               return P.size() == 2 && P[0] != P[1] &&
                      equivalent(spp_formula(P[0]), spp_formula(P[1]));
             });

  pair_suite("eval(f(f), p) iff p in right({f})",
             [&] {
               CattellProfile f = coin(rng) ? consistent_ppp(rng, conn) : random_ppp(rng);
               FactorBox image = conn.right(f);
               SzondiProfile p = (!image.is_empty() && coin(rng)) ? random_member(image, rng) : random_spp(rng);
               return std::pair{FSet{f}, PSet{p}};
             },
             [&](const FSet& F, const PSet& P) {
               return F.size() == 1 && P.size() == 1 &&
                      eval(ppp_formula(F[0], table), P[0]) != conn.right(F[0]).contains(P[0]);
             });

  {
    PropertyResult r{"global factors are disjunctions of their components", 0, std::nullopt};
    for (std::size_t i = 0; i < opts.trials && r.passed(); ++i) {
      ++r.trials;
      SzondiProfile p = random_spp(rng);
      TraitValue v = TraitValue(static_cast<int>(uniform_index(rng, 9)) + 1);
      for (GlobalFactor g : kAllGlobalFactors) {
        bool any = false;
        for (const GlobalComponent& c : global_components(g)) {
          any = any || eval(table.cell(c.trait, c.reversed ? TraitValue(10 - v.value()) : v), p);
        }
        if (eval(global_factor_formula(g, v, ReversalMode::as_printed, table), p) != any) {
          r.counterexample = std::string(to_token(g)) + " v=" + std::to_string(v.value()) + " p=" + describe(p);
          break;
        }
      }
    }
    report.results.push_back(std::move(r));
  }

  return report;
}

}  // namespace pgc
