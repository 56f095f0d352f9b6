#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace pgc {

/// Szondi's reaction signs. Declaration order is the canonical order used
/// for enumeration and serialization: the 9-chain from strongest rejection
/// to strongest approval, followed by the 3-chain of ambivalent signs.
enum class Signature : std::uint8_t {
  minus3,     // -!!!
  minus2,     // -!!
  minus1,     // -!
  minus,      // -
  zero,       // 0
  plus,       // +
  plus1,      // +!
  plus2,      // +!!
  plus3,      // +!!!
  pm_lower,   // ±₍!₎, rejection bias
  pm,         // ±
  pm_upper,   // ±^!, approval bias
};

inline constexpr std::size_t kSignatureCount = 12;

inline constexpr std::array<Signature, kSignatureCount> kAllSignatures = {
    Signature::minus3, Signature::minus2,   Signature::minus1, Signature::minus,
    Signature::zero,   Signature::plus,     Signature::plus1,  Signature::plus2,
    Signature::plus3,  Signature::pm_lower, Signature::pm,     Signature::pm_upper,
};

inline constexpr std::array<std::string_view, kSignatureCount> kSignatureTokens = {
    "-!!!", "-!!", "-!", "-", "0", "+", "+!", "+!!", "+!!!", "pm_!", "pm", "pm^!",
};

constexpr std::size_t index_of(Signature s) { return static_cast<std::size_t>(s); }

constexpr std::string_view to_token(Signature s) { return kSignatureTokens[index_of(s)]; }

constexpr std::optional<Signature> signature_from_token(std::string_view token) {
  for (std::size_t i = 0; i < kSignatureCount; ++i) {
    if (kSignatureTokens[i] == token) return kAllSignatures[i];
  }
  return std::nullopt;
}

constexpr bool on_main_chain(Signature s) { return index_of(s) <= index_of(Signature::plus3); }

/// Reflexive-transitive closure of the Hasse diagram: two disjoint chains,
/// no order relation between the main chain and the ± chain.
constexpr bool signature_leq(Signature a, Signature b) {
  if (on_main_chain(a) != on_main_chain(b)) return false;
  return index_of(a) <= index_of(b);
}

/// Polarity opposition: + and - swap at equal quantum count, ±^! and ±₍!₎ swap.
constexpr Signature signature_flip(Signature s) {
  if (on_main_chain(s)) {
    return kAllSignatures[index_of(Signature::plus3) - index_of(s)];
  }
  switch (s) {
    case Signature::pm_lower: return Signature::pm_upper;
    case Signature::pm_upper: return Signature::pm_lower;
    default: return s;
  }
}

}  // namespace pgc
