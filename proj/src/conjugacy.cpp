#include "llq/conjugacy.hpp"

#include <cstdlib>
#include <vector>

#include "llq/binomial.hpp"

namespace llq {

namespace {

std::vector<std::uint8_t> residue_bytes(const LampConfig& f, long long d) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(d), 0);
  const Residues r = project(f, d);
  for (long long i = 0; i < d; ++i) out[static_cast<std::size_t>(i)] = r.test(i) ? 1 : 0;
  return out;
}

// a and a^-1 coincide in the group; emit the shorter canonical letter.
GroupWord canonical_a(GroupWord w) {
  for (Letter& l : w.letters)
    if (l == Letter::Ainv) l = Letter::A;
  return w;
}

}  // namespace

std::optional<long long> cyclic_match(std::span<const std::uint8_t> s1,
                                      std::span<const std::uint8_t> s2) {
  if (s1.size() != s2.size()) throw std::invalid_argument("cyclic_match: length mismatch");
  const std::size_t n = s1.size();
  if (n == 0) return 0;

  // KMP failure function of the pattern s1.
  std::vector<std::size_t> fail(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t j = fail[i - 1];
    while (j > 0 && s1[i] != s1[j]) j = fail[j - 1];
    if (s1[i] == s1[j]) ++j;
    fail[i] = j;
  }
  // Scan s2 s2 (2n-1 characters suffice to see every rotation once).
  std::size_t j = 0;
  for (std::size_t i = 0; i < 2 * n - 1; ++i) {
    const std::uint8_t c = s2[i % n];
    while (j > 0 && c != s1[j]) j = fail[j - 1];
    if (c == s1[j]) ++j;
    if (j == n) return static_cast<long long>(i + 1 - n);
  }
  return std::nullopt;
}

bool is_conjugate(const LampElement& c1, const LampElement& c2) {
  if (c1.delta != c2.delta) return false;
  const long long delta = c1.delta;
  if (delta == 0) {
    if (c1.lamps.empty() || c2.lamps.empty())
      return c1.lamps.empty() && c2.lamps.empty();
    // f1 = f2^D forces endpoint alignment.
    const long long d = c1.lamps.min_pos() - c2.lamps.min_pos();
    return LampConfig::translate_equal(c1.lamps, c2.lamps, d);
  }
  const long long m = std::llabs(delta);
  const auto s1 = residue_bytes(c1.lamps, m);
  const auto s2 = residue_bytes(c2.lamps, m);
  return cyclic_match(s1, s2).has_value();
}

std::pair<GroupWord, LampElement> pull_to_window(const LampElement& g) {
  const long long delta = g.delta;
  if (delta <= 0) throw std::invalid_argument("pull_to_window: sigma_t must be positive");
  LampConfig f = g.lamps;
  GroupWord word;
  long long cur = 0;
  const auto emit = [&](long long e) {
    word.append_t(e - cur);
    word.letters.push_back(Letter::A);
    cur = e;
  };
  // (L) rightmost-first: conjugation by t^i a t^-i moves the lamp at i to i-delta.
  while (!f.empty() && f.max_pos() > delta - 1) {
    const long long i = f.max_pos();
    f.toggle(i);
    f.toggle(i - delta);
    emit(i);
  }
  // (R) leftmost-first: conjugation by t^{i+delta} a t^-(i+delta) moves i to i+delta.
  while (!f.empty() && f.min_pos() < 0) {
    const long long i = f.min_pos();
    f.toggle(i);
    f.toggle(i + delta);
    emit(i + delta);
  }
  word.append_t(-cur);
  return {std::move(word), LampElement{delta, std::move(f)}};
}

ConjugacyAnswer find_conjugator(const LampElement& c1, const LampElement& c2) {
  ConjugacyAnswer ans;
  if (c1.delta != c2.delta) return ans;
  const long long delta = c1.delta;

  if (delta == 0) {
    if (c1.lamps.empty() || c2.lamps.empty()) {
      if (c1.lamps.empty() && c2.lamps.empty()) {
        ans.conjugate = true;
        ans.conjugator = GroupWord();
        ans.shift = 0;
      }
      return ans;
    }
    // x = t^D with f1^D = f2, i.e. D = m(f1) - m(f2).
    const long long d = c1.lamps.min_pos() - c2.lamps.min_pos();
    if (!LampConfig::translate_equal(c2.lamps, c1.lamps, -d)) return ans;
    ans.conjugate = true;
    ans.conjugator = GroupWord::t_power(d);
    ans.shift = d;
  } else if (delta < 0) {
    // x^-1 c1 x = c2  <=>  x^-1 c1^-1 x = c2^-1, and the inverses have delta > 0.
    ans = find_conjugator(inv(c1), inv(c2));
    if (!ans.conjugate) return ans;
  } else {
    const auto s1 = residue_bytes(c1.lamps, delta);
    const auto s2 = residue_bytes(c2.lamps, delta);
    // Need pi(f1)^D = pi(f2): s2[i] = s1[(i+D) mod delta].
    const auto rot = cyclic_match(s2, s1);
    if (!rot) return ans;
    const long long D = *rot;
    const LampElement shifted = conjugate(c1, LampElement{D, LampConfig()});
    auto [w1, r1] = pull_to_window(shifted);
    auto [w2, r2] = pull_to_window(c2);
    if (!(r1 == r2)) throw std::logic_error("find_conjugator: window forms differ");
    GroupWord x = GroupWord::t_power(D);
    x.append(w1);
    x.append(w2.inverse());
    ans.conjugate = true;
    ans.conjugator = canonical_a(std::move(x));
    ans.shift = D;
  }
  if (!(conjugate(c1, eval(*ans.conjugator)) == c2))
    throw std::logic_error("find_conjugator: verification failed");
  return ans;
}

}  // namespace llq
