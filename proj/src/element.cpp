#include "llq/element.hpp"

#include <cstdlib>

#include "llq/binomial.hpp"

namespace llq {

LampElement mul(const LampElement& g, const LampElement& h) {
  LampElement out;
  out.delta = g.delta + h.delta;
  out.lamps = h.lamps;
  out.lamps.add_shifted(g.lamps, -h.delta);
  return out;
}

LampElement inv(const LampElement& g) {
  LampElement out;
  out.delta = -g.delta;
  out.lamps = g.lamps;
  out.lamps.shift(g.delta);
  return out;
}

LampElement conjugate(const LampElement& g, const LampElement& z) {
  LampElement out;
  out.delta = g.delta;
  out.lamps = z.lamps;
  out.lamps.add_shifted(z.lamps, -g.delta);
  out.lamps.add_shifted(g.lamps, -z.delta);
  return out;
}

LampElement square(const LampElement& g) {
  LampElement out;
  out.delta = 2 * g.delta;
  out.lamps = g.lamps;
  out.lamps.add_shifted(g.lamps, -g.delta);
  return out;
}

GroupWord to_word(const LampElement& g) {
  GroupWord w;
  long long cur = 0;
  // t^delta * prod_p t^p a t^-p, with consecutive t-runs merged.
  bool first = true;
  g.lamps.for_each_bit([&](long long p) {
    w.append_t(first ? g.delta + p : p - cur);
    w.letters.push_back(Letter::A);
    cur = p;
    first = false;
  });
  if (first)
    w.append_t(g.delta);
  else
    w.append_t(-cur);
  return w;
}

bool is_square(const LampElement& g) {
  if (g.delta % 2 != 0) return false;
  return project(g.lamps, std::llabs(g.delta) / 2).is_zero();
}

std::optional<LampElement> sqrt_witness(const LampElement& g) {
  if (!is_square(g)) return std::nullopt;
  const long long b = g.delta / 2;
  LampElement h;
  h.delta = b;
  if (b != 0 && !g.lamps.empty()) {
    // f = (1 - x^b) w for some w; then (b, x^b w)^2 = (2b, f).
    h.lamps = divide_by_binomial(g.lamps, std::llabs(b));
    if (b > 0) h.lamps.shift(b);
  }
  // delta == 0 squares are exactly the identity, handled by empty lamps.
  if (!(mul(h, h) == g)) throw std::logic_error("sqrt_witness: substitution check failed");
  return h;
}

bool in_derived(const LampElement& g) { return g.delta == 0 && sigma_a(g) == 0; }

std::pair<LampElement, LampElement> commutator_witness(const LampElement& g) {
  if (g.delta != 0) throw not_in_subgroup("not in derived subgroup: sigma_t != 0");
  if (sigma_a(g) != 0) throw not_in_subgroup("not in derived subgroup: sigma_a != 0");
  // G(j) = sum_{i<=j} f(i) has finite support exactly because sigma_a(f)=0,
  // and (0,G)(1,0)(0,G)^-1(1,0)^-1 = (0,f).
  LampConfig prefix;
  bool on = false;
  long long start = 0;
  g.lamps.for_each_bit([&](long long p) {
    if (!on) {
      start = p;
      on = true;
    } else {
      for (long long q = start; q < p; ++q) prefix.toggle(q);
      on = false;
    }
  });
  LampElement x{0, prefix};
  LampElement y = gen_t();
  LampElement check = mul(mul(mul(x, y), inv(x)), inv(y));
  if (!(check == g)) throw std::logic_error("commutator_witness: substitution check failed");
  return {x, y};
}

bool in_V(const LampElement& g) { return g.delta % 2 == 0 && sigma_a(g) == 0; }

std::pair<LampElement, LampElement> two_squares_witness(const LampElement& g) {
  if (g.delta % 2 != 0) throw not_in_subgroup("not in V: sigma_t odd");
  if (sigma_a(g) != 0) throw not_in_subgroup("not in V: sigma_a != 0");
  const long long kk = g.delta / 2 - 1;
  // Solve h(u) + h(u+1) = f(u - 2k) by suffix sums h(u) = sum_{w >= u-2k} f(w);
  // finite support again because sigma_a(f) = 0.
  LampConfig h;
  const auto supp = g.lamps.support();
  for (std::size_t i = supp.size(); i >= 2; i -= 2) {
    // suffix parity is odd exactly on (supp[i-2], supp[i-1]]
    for (long long v = supp[i - 2] + 1; v <= supp[i - 1]; ++v) h.toggle(v + 2 * kk);
  }
  LampElement x{1, h};
  LampElement y{kk, LampConfig()};
  LampElement check = mul(square(x), square(y));
  if (!(check == g)) throw std::logic_error("two_squares_witness: substitution check failed");
  return {x, y};
}

}  // namespace llq
