#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "llq/element.hpp"
#include "llq/word.hpp"

namespace llq {

struct ConjugacyAnswer {
  bool conjugate = false;
  std::optional<GroupWord> conjugator;  // x with x^-1 c1 x = c2, verified
  std::optional<long long> shift;       // the matched translation / rotation
};

/// Least Delta >= 0 with s1[i] == s2[(i + Delta) mod n] for all i, found by
/// KMP over s2 doubled; nullopt when s1 is not a rotation of s2.
/// Throws std::invalid_argument on length mismatch.
std::optional<long long> cyclic_match(std::span<const std::uint8_t> s1,
                                      std::span<const std::uint8_t> s2);

/// Linear-time conjugacy decision.
bool is_conjugate(const LampElement& c1, const LampElement& c2);

/// For sigma_t(g) = delta > 0: elementary conjugations by t^i a t^-i pull
/// every lamp into the window {0,...,delta-1}. Returns the merged conjugator
/// word c and the result (delta, f') = c^-1 g c with f' = pi_delta(f) read
/// on the window. Throws std::invalid_argument for delta <= 0.
std::pair<GroupWord, LampElement> pull_to_window(const LampElement& g);

/// Conjugacy search: decision plus a substitution-verified conjugator word.
ConjugacyAnswer find_conjugator(const LampElement& c1, const LampElement& c2);

}  // namespace llq
