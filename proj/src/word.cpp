#include "llq/word.hpp"

#include <cctype>

#include "llq/element.hpp"

namespace llq {

GroupWord GroupWord::inverse() const {
  GroupWord out;
  out.letters.reserve(letters.size());
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    switch (*it) {
      case Letter::A: out.letters.push_back(Letter::Ainv); break;
      case Letter::Ainv: out.letters.push_back(Letter::A); break;
      case Letter::T: out.letters.push_back(Letter::Tinv); break;
      case Letter::Tinv: out.letters.push_back(Letter::T); break;
    }
  }
  return out;
}

GroupWord& GroupWord::append_t(long long e) {
  const Letter l = e >= 0 ? Letter::T : Letter::Tinv;
  for (long long i = 0; i < (e >= 0 ? e : -e); ++i) letters.push_back(l);
  return *this;
}

GroupWord parse_word(std::string_view text, std::size_t cap) {
  GroupWord w;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    bool gen_is_a;
    bool inverted;
    switch (c) {
      case 'a': gen_is_a = true;  inverted = false; break;
      case 'A': gen_is_a = true;  inverted = true;  break;
      case 't': gen_is_a = false; inverted = false; break;
      case 'T': gen_is_a = false; inverted = true;  break;
      default:
        throw parse_error(i, std::string("unexpected character '") + c + "'");
    }
    ++i;
    long long exp = 1;
    if (i < n && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < n && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw parse_error(i, "expected integer exponent after '^'");
      long long v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > static_cast<long long>(kDefaultWordCap))
          throw parse_error(i, "exponent too large");
        ++i;
      }
      exp = neg ? -v : v;
    }
    if (exp < 0) {
      inverted = !inverted;
      exp = -exp;
    }
    if (w.letters.size() + static_cast<std::size_t>(exp) > cap)
      throw parse_error(i, "word exceeds length cap of " + std::to_string(cap));
    const Letter l = gen_is_a ? (inverted ? Letter::Ainv : Letter::A)
                              : (inverted ? Letter::Tinv : Letter::T);
    for (long long r = 0; r < exp; ++r) w.letters.push_back(l);
  }
  return w;
}

std::string serialize(const GroupWord& w) {
  std::string out;
  std::size_t i = 0;
  const auto& ls = w.letters;
  while (i < ls.size()) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const std::size_t run = j - i;
    if (!out.empty()) out += ' ';
    switch (ls[i]) {
      case Letter::A: out += 'a'; break;
      case Letter::Ainv: out += "a^-"; break;
      case Letter::T: out += 't'; break;
      case Letter::Tinv: out += "t^-"; break;
    }
    const bool inv = ls[i] == Letter::Ainv || ls[i] == Letter::Tinv;
    if (inv)
      out += std::to_string(run);
    else if (run > 1)
      out += "^" + std::to_string(run);
    i = j;
  }
  return out;
}

LampElement eval(const GroupWord& w) {
  // Lamps are toggled at the running t-prefix sum; the final rebase by
  // -delta is O(1), which keeps the whole evaluation linear.
  LampElement g;
  long long pos = 0;
  for (Letter l : w.letters) {
    switch (l) {
      case Letter::A:
      case Letter::Ainv: g.lamps.toggle(pos); break;
      case Letter::T: ++pos; break;
      case Letter::Tinv: --pos; break;
    }
  }
  g.lamps.shift(-pos);
  g.delta = pos;
  return g;
}

int sigma_a(const GroupWord& w) {
  std::size_t c = 0;
  for (Letter l : w.letters)
    if (l == Letter::A || l == Letter::Ainv) ++c;
  return static_cast<int>(c & 1);
}

long long sigma_t(const GroupWord& w) {
  long long s = 0;
  for (Letter l : w.letters) {
    if (l == Letter::T) ++s;
    if (l == Letter::Tinv) --s;
  }
  return s;
}

}  // namespace llq
