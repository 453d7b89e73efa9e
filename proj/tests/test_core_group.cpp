#include <doctest.h>

#include "llq/element.hpp"
#include "llq/word.hpp"
#include "test_util.hpp"

using namespace llq;
using testutil::Rng;

namespace {
LampElement elem(long long delta, std::initializer_list<long long> supp) {
  return {delta, LampConfig::from_support(supp)};
}
}  // namespace

TEST_CASE("parse_word") {
  CHECK(parse_word("").letters.empty());
  CHECK(parse_word("atat^3").letters ==
        std::vector<Letter>{Letter::A, Letter::T, Letter::A, Letter::T, Letter::T, Letter::T});
  CHECK(parse_word("t^-2 a").letters == std::vector<Letter>{Letter::Tinv, Letter::Tinv, Letter::A});
  CHECK(parse_word("A").letters == std::vector<Letter>{Letter::Ainv});
  CHECK(parse_word("T^2").letters == std::vector<Letter>{Letter::Tinv, Letter::Tinv});
  CHECK(parse_word("T^-2").letters == std::vector<Letter>{Letter::T, Letter::T});
  CHECK(parse_word("a^0").letters.empty());
  CHECK(parse_word(" a\t t ").letters == std::vector<Letter>{Letter::A, Letter::T});

  CHECK_THROWS_AS(parse_word("x"), parse_error);
  CHECK_THROWS_AS(parse_word("a^"), parse_error);
  CHECK_THROWS_AS(parse_word("a^foo"), parse_error);
  CHECK_THROWS_AS(parse_word("t^100", 10), parse_error);
  try {
    parse_word("at b");
  } catch (const parse_error& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("serialize round-trip and canonical form") {
  CHECK(serialize(parse_word("a t^-3 a")) == "a t^-3 a");
  CHECK(serialize(parse_word("atat^3")) == "a t a t^3");
  CHECK(serialize(parse_word("AA t")) == "a^-2 t");
  CHECK(serialize(GroupWord()) == "");
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const GroupWord w = testutil::random_word(rng, rng.below(40));
    CHECK(parse_word(serialize(w)) == w);
  }
}

TEST_CASE("eval pinned values") {
  CHECK(eval(parse_word("a")) == elem(0, {0}));
  CHECK(eval(parse_word("a a")) == elem(0, {}));
  CHECK(eval(parse_word("t")) == elem(1, {}));
  // derived via the naive left-to-right oracle
  CHECK(testutil::naive_eval(parse_word("atat^3")) == testutil::NaiveElem{4, {-4, -3}});
  CHECK(eval(parse_word("atat^3")) == elem(4, {-4, -3}));
}

TEST_CASE("eval agrees with the naive oracle on random words") {
  Rng rng(12);
  for (int i = 0; i < 2000; ++i) {
    const GroupWord w = testutil::random_word(rng, rng.below(60));
    CHECK(testutil::to_naive(eval(w)) == testutil::naive_eval(w));
  }
}

TEST_CASE("mul / inv / conjugate pinned values") {
  CHECK(mul(elem(1, {}), elem(0, {0})) == elem(1, {0}));
  CHECK(mul(elem(0, {0}), elem(1, {})) == elem(1, {-1}));
  CHECK(inv(elem(1, {})) == elem(-1, {}));
  CHECK(inv(elem(0, {0})) == elem(0, {0}));
  CHECK(inv(elem(1, {0})) == elem(-1, {1}));
  CHECK(conjugate(elem(0, {0}), elem(-1, {})) == elem(0, {1}));
  CHECK(conjugate(elem(1, {-1}), elem(0, {0})) == elem(1, {0}));
}

TEST_CASE("group laws and formulae on random elements") {
  Rng rng(13);
  const LampElement identity;
  for (int i = 0; i < 2000; ++i) {
    const LampElement g = testutil::random_element(rng, 20, 30, 8);
    const LampElement h = testutil::random_element(rng, 20, 30, 8);
    const LampElement k = testutil::random_element(rng, 20, 30, 8);

    CHECK(mul(mul(g, h), k) == mul(g, mul(h, k)));
    CHECK(mul(g, identity) == g);
    CHECK(mul(identity, g) == g);
    CHECK(mul(g, inv(g)).is_identity());
    CHECK(mul(g, g) == square(g));
    CHECK(conjugate(g, h) == mul(mul(inv(h), g), h));
    CHECK(conjugate(g, identity) == g);

    // sigma homomorphisms
    CHECK(sigma_a(mul(g, h)) == (sigma_a(g) ^ sigma_a(h)));
    CHECK(sigma_t(mul(g, h)) == sigma_t(g) + sigma_t(h));
  }
}

TEST_CASE("word/element consistency") {
  Rng rng(14);
  for (int i = 0; i < 500; ++i) {
    GroupWord w1 = testutil::random_word(rng, rng.below(30));
    const GroupWord w2 = testutil::random_word(rng, rng.below(30));
    CHECK(eval(w1.inverse()) == inv(eval(w1)));
    const LampElement lhs = mul(eval(w1), eval(w2));
    w1.append(w2);
    CHECK(eval(w1) == lhs);
  }
}

TEST_CASE("to_word round trip") {
  Rng rng(15);
  for (int i = 0; i < 500; ++i) {
    const LampElement g = testutil::random_element(rng, 15, 25, 8);
    CHECK(eval(to_word(g)) == g);
  }
  CHECK(serialize(to_word(elem(1, {}))) == "t");
  CHECK(serialize(to_word(elem(0, {0}))) == "a");
}

TEST_CASE("diam") {
  CHECK(LampConfig::from_support({-4, -3}).diameter() == 1);
  CHECK(LampConfig::from_support({0}).diameter() == 0);
  CHECK_THROWS_AS(LampConfig().diameter(), empty_support_error);
  Rng rng(16);
  for (int i = 0; i < 300; ++i) {
    LampConfig f = testutil::random_element(rng, 0, 40, 7).lamps;
    if (f.empty()) continue;
    const long long d = f.diameter();
    f.shift(rng.range(-50, 50));
    CHECK(f.diameter() == d);
  }
}

TEST_CASE("word length bounds") {
  Rng rng(17);
  int checked_strict = 0;
  for (int i = 0; i < 3000; ++i) {
    GroupWord w = testutil::random_word(rng, 1 + rng.below(50));
    if (rng.below(2)) w.append_t(-sigma_t(w));  // force Y-words regularly
    const LampElement g = eval(w);
    const long long n = static_cast<long long>(w.size());
    CHECK(std::abs(g.delta) <= n);
    if (!g.lamps.empty()) {
      CHECK(g.lamps.diameter() <= n);
      if (g.delta == 0 && n >= 2) {
        CHECK(2 * g.lamps.diameter() <= n - 2);  // diam <= |w|/2 - 1
        ++checked_strict;
      }
    }
  }
  CHECK(checked_strict > 100);
}

TEST_CASE("is_square / sqrt_witness") {
  CHECK_FALSE(is_square(eval(parse_word("atat^3"))));
  CHECK(is_square(elem(2, {})));
  CHECK(*sqrt_witness(elem(2, {})) == elem(1, {}));
  CHECK_FALSE(is_square(elem(0, {0, 2})));
  CHECK(is_square(elem(0, {})));

  Rng rng(18);
  for (int i = 0; i < 1000; ++i) {
    const LampElement h = testutil::random_element(rng, 10, 15, 6);
    const LampElement g = square(h);
    CHECK(is_square(g));
    const auto r = sqrt_witness(g);
    REQUIRE(r.has_value());
    CHECK(square(*r) == g);
  }
}

TEST_CASE("in_derived / commutator_witness") {
  const auto [x, y] = commutator_witness(elem(0, {0, 1}));
  CHECK(x == elem(0, {0}));
  CHECK(y == elem(1, {}));
  CHECK_THROWS_AS(commutator_witness(elem(1, {})), not_in_subgroup);
  CHECK_THROWS_AS(commutator_witness(elem(0, {0})), not_in_subgroup);

  Rng rng(19);
  for (int i = 0; i < 500; ++i) {
    LampElement g = testutil::random_element(rng, 0, 30, 8);
    if (sigma_a(g)) g.lamps.toggle(rng.range(-30, 30));
    if (sigma_a(g)) continue;  // toggle may have hit an existing lamp
    CHECK(in_derived(g));
    const auto [cx, cy] = commutator_witness(g);
    CHECK(mul(mul(mul(cx, cy), inv(cx)), inv(cy)) == g);
  }
}

TEST_CASE("in_V / two_squares_witness") {
  CHECK(in_V(eval(parse_word("atat^3"))));
  CHECK_FALSE(in_V(elem(1, {})));
  const auto [x, y] = two_squares_witness(elem(4, {-4, -3}));
  CHECK(x == elem(1, {-1}));
  CHECK(y == elem(1, {}));
  CHECK(mul(square(x), square(y)) == elem(4, {-4, -3}));
  CHECK_THROWS_AS(two_squares_witness(elem(1, {})), not_in_subgroup);
  CHECK_THROWS_AS(two_squares_witness(elem(0, {3})), not_in_subgroup);

  Rng rng(20);
  for (int i = 0; i < 500; ++i) {
    LampElement g = testutil::random_element(rng, 12, 20, 8);
    g.delta *= 2;
    if (sigma_a(g)) g.lamps.toggle(rng.range(-20, 20));
    if (sigma_a(g)) continue;
    CHECK(in_V(g));
    const auto [sx, sy] = two_squares_witness(g);
    CHECK(mul(square(sx), square(sy)) == g);
  }
}

TEST_CASE("LampConfig mechanics") {
  LampConfig f;
  CHECK(f.empty());
  f.toggle(5);
  f.toggle(-100);
  CHECK(f.min_pos() == -100);
  CHECK(f.max_pos() == 5);
  f.toggle(5);
  CHECK(f.max_pos() == -100);
  f.toggle(-100);
  CHECK(f.empty());

  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    // add_shifted against the set model
    const LampElement a = testutil::random_element(rng, 0, 50, 10);
    const LampElement b = testutil::random_element(rng, 0, 50, 10);
    const long long s = rng.range(-80, 80);
    LampConfig got = a.lamps;
    got.add_shifted(b.lamps, s);
    std::set<long long> expect;
    for (long long p : a.lamps.support()) expect.insert(p);
    for (long long p : b.lamps.support()) {
      if (expect.count(p + s))
        expect.erase(p + s);
      else
        expect.insert(p + s);
    }
    const auto sup = got.support();
    CHECK(std::set<long long>(sup.begin(), sup.end()) == expect);
    CHECK(got.weight() == expect.size());
  }
}

TEST_CASE("translate_equal") {
  Rng rng(22);
  for (int i = 0; i < 500; ++i) {
    const LampConfig f = testutil::random_element(rng, 0, 60, 9).lamps;
    const long long s = rng.range(-90, 90);
    LampConfig g = f;
    g.shift(s);
    CHECK(LampConfig::translate_equal(g, f, s));
    if (!f.empty()) {
      LampConfig h = g;
      h.toggle(h.min_pos() + 1);
      CHECK_FALSE(LampConfig::translate_equal(h, f, s));
    }
  }
}
