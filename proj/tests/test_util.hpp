#pragma once

// Test-only reference arithmetic: a transparent set-based model of the group
// law, kept deliberately independent of the bit-packed production code. All
// derived expected values in the test suites come from this oracle.

#include <cstdint>
#include <set>
#include <vector>

#include "llq/element.hpp"
#include "llq/word.hpp"

namespace testutil {

struct NaiveElem {
  long long delta = 0;
  std::set<long long> lamps;

  friend bool operator==(const NaiveElem& a, const NaiveElem& b) {
    return a.delta == b.delta && a.lamps == b.lamps;
  }
};

inline NaiveElem naive_mul(const NaiveElem& a, const NaiveElem& b) {
  // (d1,f1)(d2,f2) = (d1+d2, f1^{d2} + f2); supp(f^b) = supp(f) - b
  NaiveElem out;
  out.delta = a.delta + b.delta;
  out.lamps = b.lamps;
  for (long long p : a.lamps) {
    const long long q = p - b.delta;
    if (out.lamps.count(q))
      out.lamps.erase(q);
    else
      out.lamps.insert(q);
  }
  return out;
}

inline NaiveElem naive_inv(const NaiveElem& g) {
  NaiveElem out;
  out.delta = -g.delta;
  for (long long p : g.lamps) out.lamps.insert(p + g.delta);
  return out;
}

inline NaiveElem naive_conj(const NaiveElem& g, const NaiveElem& z) {
  return naive_mul(naive_mul(naive_inv(z), g), z);
}

inline NaiveElem naive_eval(const llq::GroupWord& w) {
  NaiveElem acc;
  for (llq::Letter l : w.letters) {
    NaiveElem gen;
    switch (l) {
      case llq::Letter::A:
      case llq::Letter::Ainv: gen.lamps.insert(0); break;
      case llq::Letter::T: gen.delta = 1; break;
      case llq::Letter::Tinv: gen.delta = -1; break;
    }
    acc = naive_mul(acc, gen);
  }
  return acc;
}

inline NaiveElem to_naive(const llq::LampElement& g) {
  NaiveElem out;
  out.delta = g.delta;
  for (long long p : g.lamps.support()) out.lamps.insert(p);
  return out;
}

inline llq::LampElement from_naive(const NaiveElem& g) {
  llq::LampElement out;
  out.delta = g.delta;
  for (long long p : g.lamps) out.lamps.toggle(p);
  return out;
}

// --- deterministic generators ------------------------------------------------

struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed ^ 0x9e3779b97f4a7c15ULL) {}
  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
  std::uint64_t below(std::uint64_t n) { return next() % n; }
  long long range(long long lo, long long hi) {  // inclusive
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

inline llq::GroupWord random_word(Rng& rng, std::size_t len) {
  llq::GroupWord w;
  w.letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i)
    w.letters.push_back(static_cast<llq::Letter>(rng.below(4)));
  return w;
}

inline llq::LampElement random_element(Rng& rng, long long delta_bound, long long supp_bound,
                                       std::size_t max_lamps) {
  llq::LampElement g;
  g.delta = rng.range(-delta_bound, delta_bound);
  const std::size_t n = rng.below(max_lamps + 1);
  for (std::size_t i = 0; i < n; ++i) g.lamps.toggle(rng.range(-supp_bound, supp_bound));
  return g;
}

}  // namespace testutil
