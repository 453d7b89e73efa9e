#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "llq/lamp_config.hpp"

namespace llq {

enum class Letter : unsigned char { A, Ainv, T, Tinv };

struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(std::size_t pos, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
};

/// A word over the group alphabet {a, a^-1, t, t^-1}.
struct GroupWord {
  std::vector<Letter> letters;

  GroupWord() = default;
  explicit GroupWord(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }

  GroupWord inverse() const;
  GroupWord& append(const GroupWord& w) {
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    return *this;
  }
  /// Appends t^e (e may be negative).
  GroupWord& append_t(long long e);
  static GroupWord t_power(long long e) {
    GroupWord w;
    w.append_t(e);
    return w;
  }

  friend bool operator==(const GroupWord& a, const GroupWord& b) {
    return a.letters == b.letters;
  }
};

inline constexpr std::size_t kDefaultWordCap = 100'000'000;  // unary-scale guard

/// Grammar: letters 'a'/'t' with optional '^'<signed int> exponent, 'A'/'T'
/// shorthand for inverses, whitespace ignored. Exponents are expanded; the
/// expansion is rejected once it exceeds `cap` letters.
GroupWord parse_word(std::string_view text, std::size_t cap = kDefaultWordCap);

/// Canonical form: lowercase letters, maximal same-letter runs as exponents,
/// factors separated by single spaces ("a t^-3 a"). parse(serialize(w)) == w.
std::string serialize(const GroupWord& w);

struct LampElement;

/// Canonical element of the word; linear time in |w|.
LampElement eval(const GroupWord& w);

int sigma_a(const GroupWord& w);        // exponent sum of a mod 2
long long sigma_t(const GroupWord& w);  // exponent sum of t

}  // namespace llq
