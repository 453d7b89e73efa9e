#pragma once

#include <optional>
#include <utility>

#include "llq/lamp_config.hpp"
#include "llq/word.hpp"

namespace llq {

struct not_in_subgroup : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Element (delta, f) of the lamplighter group Z_2 wr Z: lamplighter
/// displacement plus finite lamp configuration. Immutable by convention;
/// all operations below are pure.
struct LampElement {
  long long delta = 0;
  LampConfig lamps;

  bool is_identity() const { return delta == 0 && lamps.empty(); }

  friend bool operator==(const LampElement& a, const LampElement& b) {
    return a.delta == b.delta && a.lamps == b.lamps;
  }
};

inline LampElement gen_a() { return {0, LampConfig::single(0)}; }
inline LampElement gen_t() { return {1, LampConfig()}; }

/// (d1,f1)(d2,f2) = (d1+d2, f1^{d2} + f2), where f^b = f * x^{-b}.
LampElement mul(const LampElement& g, const LampElement& h);
/// (d,f)^{-1} = (-d, x^d f).
LampElement inv(const LampElement& g);
/// z^{-1} g z = (d_g, (1 - x^{-d_g}) f_z + x^{-d_z} f_g).
LampElement conjugate(const LampElement& g, const LampElement& z);
/// (d,f)^2 = (2d, f^d + f).
LampElement square(const LampElement& g);

inline int sigma_a(const LampElement& g) { return g.lamps.parity() ? 1 : 0; }
inline long long sigma_t(const LampElement& g) { return g.delta; }

/// Word evaluating to g: t^delta followed by one a per lit lamp, with the
/// t-runs merged. eval(to_word(g)) == g.
GroupWord to_word(const LampElement& g);

/// Square criterion: delta even and pi_{delta/2}(f) = 0.
bool is_square(const LampElement& g);
/// When is_square(g), some h with h^2 = g (checked before returning).
std::optional<LampElement> sqrt_witness(const LampElement& g);

/// Derived-subgroup membership: sigma_a = 0 and sigma_t = 0.
bool in_derived(const LampElement& g);
/// A pair (x, y) with x y x^{-1} y^{-1} = g; throws not_in_subgroup.
std::pair<LampElement, LampElement> commutator_witness(const LampElement& g);

/// Membership in the verbal subgroup of squares: sigma_t even, sigma_a = 0.
bool in_V(const LampElement& g);
/// A pair (x, y) with x^2 y^2 = g; throws not_in_subgroup.
std::pair<LampElement, LampElement> two_squares_witness(const LampElement& g);

}  // namespace llq
