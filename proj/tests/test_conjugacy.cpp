#include <doctest.h>

#include <set>

#include "llq/conjugacy.hpp"
#include "test_util.hpp"

using namespace llq;
using testutil::Rng;

namespace {

std::vector<std::uint8_t> bits(std::string_view s) {
  std::vector<std::uint8_t> out;
  for (char c : s) out.push_back(c == '1' ? 1 : 0);
  return out;
}

// naive rotation scan
std::optional<long long> naive_cyclic(const std::vector<std::uint8_t>& s1,
                                      const std::vector<std::uint8_t>& s2) {
  const std::size_t n = s1.size();
  for (std::size_t d = 0; d < std::max<std::size_t>(n, 1); ++d) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = s1[i] == s2[(i + d) % n];
    if (ok) return static_cast<long long>(d);
  }
  return std::nullopt;
}

LampElement elem(long long delta, std::initializer_list<long long> supp) {
  return {delta, LampConfig::from_support(supp)};
}

}  // namespace

TEST_CASE("cyclic_match pinned values") {
  CHECK(naive_cyclic(bits("10110"), bits("11010")) == 3);  // oracle for the frozen value
  CHECK(cyclic_match(bits("10110"), bits("11010")) == 3);
  CHECK(cyclic_match(bits("1011"), bits("1011")) == 0);
  CHECK(cyclic_match(bits("10"), bits("01")) == 1);
  CHECK(!cyclic_match(bits("11"), bits("10")).has_value());
  CHECK_THROWS_AS(cyclic_match(bits("1"), bits("10")), std::invalid_argument);
}

TEST_CASE("cyclic_match agrees with the rotation scan") {
  Rng rng(41);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t n = 1 + rng.below(24);
    std::vector<std::uint8_t> s1(n), s2(n);
    for (auto& b : s1) b = static_cast<std::uint8_t>(rng.below(2));
    if (rng.below(2)) {  // force rotations half the time
      const std::size_t d = rng.below(n);
      for (std::size_t j = 0; j < n; ++j) s2[j] = s1[(j + n - d) % n];
      // then s1[i] == s2[(i+d) % n]
    } else {
      for (auto& b : s2) b = static_cast<std::uint8_t>(rng.below(2));
    }
    CHECK(cyclic_match(s1, s2) == naive_cyclic(s1, s2));
  }
}

TEST_CASE("is_conjugate pinned values") {
  CHECK(is_conjugate(eval(parse_word("a")), eval(parse_word("taT"))));
  CHECK_FALSE(is_conjugate(eval(parse_word("a")), eval(parse_word("t"))));
  CHECK(is_conjugate(eval(parse_word("ta")), eval(parse_word("at"))));
  CHECK(is_conjugate(elem(0, {}), elem(0, {})));
  CHECK_FALSE(is_conjugate(elem(0, {}), elem(0, {0})));
  CHECK(is_conjugate(elem(1, {}), elem(1, {})));
  CHECK_FALSE(is_conjugate(elem(1, {}), elem(1, {0})));
}

TEST_CASE("is_conjugate complete on an exhaustive small family") {
  // elements with |delta| <= 2 and support inside [-2,2]; the brute-force
  // oracle conjugates by every z with |delta_z| <= 6, supp(f_z) in [-4,4]
  std::vector<LampElement> all;
  for (long long d = -2; d <= 2; ++d)
    for (unsigned mask = 0; mask < 32; ++mask) {
      LampElement g;
      g.delta = d;
      for (int b = 0; b < 5; ++b)
        if (mask & (1u << b)) g.lamps.toggle(b - 2);
      all.push_back(g);
    }
  std::vector<LampElement> zs;
  for (long long dz = -6; dz <= 6; ++dz)
    for (unsigned mask = 0; mask < 512; ++mask) {
      LampElement z;
      z.delta = dz;
      for (int b = 0; b < 9; ++b)
        if (mask & (1u << b)) z.lamps.toggle(b - 4);
      zs.push_back(z);
    }

  Rng rng(42);
  int positives = 0;
  for (int iter = 0; iter < 400; ++iter) {
    const LampElement& g = all[rng.below(all.size())];
    const LampElement& h = all[rng.below(all.size())];
    bool oracle = false;
    for (const auto& z : zs)
      if (conjugate(g, z) == h) {
        oracle = true;
        break;
      }
    CHECK(is_conjugate(g, h) == oracle);
    if (oracle) {
      ++positives;
      const auto ans = find_conjugator(g, h);
      CHECK(ans.conjugate);
      CHECK(conjugate(g, eval(*ans.conjugator)) == h);
    }
  }
  CHECK(positives > 20);
}

TEST_CASE("pull_to_window pinned values") {
  {
    const auto [w, r] = pull_to_window(elem(1, {-1}));
    CHECK(serialize(w) == "a");
    CHECK(r == elem(1, {0}));
  }
  {
    const auto [w, r] = pull_to_window(elem(2, {0, 1}));
    CHECK(w.empty());
    CHECK(r == elem(2, {0, 1}));
  }
  {
    const auto [w, r] = pull_to_window(elem(1, {5}));
    CHECK(r == elem(1, {0}));
    CHECK(conjugate(elem(1, {5}), eval(w)) == r);
  }
  CHECK_THROWS_AS(pull_to_window(elem(0, {1})), std::invalid_argument);
  CHECK_THROWS_AS(pull_to_window(elem(-1, {1})), std::invalid_argument);
}

TEST_CASE("pull_to_window postconditions on random elements") {
  Rng rng(43);
  for (int i = 0; i < 1000; ++i) {
    LampElement g = testutil::random_element(rng, 0, 40, 9);
    g.delta = 1 + static_cast<long long>(rng.below(12));
    const auto [w, r] = pull_to_window(g);
    CHECK(conjugate(g, eval(w)) == r);
    if (!r.lamps.empty()) {
      CHECK(r.lamps.min_pos() >= 0);
      CHECK(r.lamps.max_pos() <= g.delta - 1);
    }
    // window content is the projection
    const Residues p = project(g.lamps, g.delta);
    for (long long t = 0; t < g.delta; ++t) CHECK(r.lamps.test(t) == p.test(t));
    // length bound 3(|M| + |m| + delta)
    long long m = 0, M = 0;
    if (!g.lamps.empty()) {
      m = std::min(0LL, g.lamps.min_pos());
      M = std::max(0LL, g.lamps.max_pos());
    }
    CHECK(static_cast<long long>(w.size()) <= 3 * (M - m + g.delta));
  }
}

TEST_CASE("find_conjugator pinned values") {
  {
    const auto ans = find_conjugator(eval(parse_word("a")), eval(parse_word("taT")));
    REQUIRE(ans.conjugate);
    CHECK(serialize(*ans.conjugator) == "t^-1");
    CHECK(ans.shift == -1);
  }
  {
    const auto ans = find_conjugator(eval(parse_word("ta")), eval(parse_word("at")));
    REQUIRE(ans.conjugate);
    CHECK(serialize(*ans.conjugator) == "a");
  }
  {
    const LampElement g = eval(parse_word("t a t^2 a T"));
    const auto ans = find_conjugator(g, g);
    REQUIRE(ans.conjugate);
    CHECK(eval(*ans.conjugator).is_identity());
  }
  CHECK_FALSE(find_conjugator(eval(parse_word("a")), eval(parse_word("t"))).conjugate);
}

TEST_CASE("random conjugate pairs: found conjugator verifies, bounded length") {
  Rng rng(44);
  for (int i = 0; i < 800; ++i) {
    const GroupWord wg = testutil::random_word(rng, 1 + rng.below(60));
    const GroupWord wz = testutil::random_word(rng, rng.below(20));
    GroupWord wc2 = wz.inverse();
    wc2.append(wg);
    wc2.append(wz);
    const LampElement c1 = eval(wg);
    const LampElement c2 = eval(wc2);
    CHECK(is_conjugate(c1, c2));
    const auto ans = find_conjugator(c1, c2);
    REQUIRE(ans.conjugate);
    CHECK(conjugate(c1, eval(*ans.conjugator)) == c2);
    CHECK(ans.conjugator->size() <= 8 * (wg.size() + wc2.size()));
  }
}

TEST_CASE("negative pairs rejected") {
  Rng rng(45);
  for (int i = 0; i < 500; ++i) {
    const LampElement g = testutil::random_element(rng, 10, 20, 7);
    LampElement h = g;
    if (rng.below(2)) {
      h.delta += 1 + static_cast<long long>(rng.below(3));  // sigma_t mismatch
    } else {
      h.lamps.toggle(rng.range(-25, 25));  // sigma_a mismatch
    }
    if (sigma_a(h) == sigma_a(g) && h.delta == g.delta) continue;
    CHECK_FALSE(is_conjugate(g, h));
    CHECK_FALSE(find_conjugator(g, h).conjugate);
  }
}
