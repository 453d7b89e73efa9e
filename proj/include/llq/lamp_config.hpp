#pragma once

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "llq/bitops.hpp"

namespace llq {

struct empty_support_error : std::logic_error {
  empty_support_error() : std::logic_error("operation undefined on empty support") {}
};

/// A finite lamp configuration f: Z -> Z_2, equivalently a GF(2) Laurent
/// polynomial (bit at position p <-> term x^p).
///
/// Storage is a bit-packed deque: one word buffer with geometric slack on
/// both sides, so extension at either end is amortized O(1), m(f)/M(f) are
/// O(1) reads, and a global shift (multiplication by x^s) is a rebase, not
/// a copy. Invariant: every set bit lies in [lo_, hi_] and, when nonempty,
/// the bits at lo_ and hi_ are set.
class LampConfig {
 public:
  LampConfig() = default;

  static LampConfig single(long long pos) {
    LampConfig f;
    f.toggle(pos);
    return f;
  }
  static LampConfig from_support(std::span<const long long> positions) {
    LampConfig f;
    for (long long p : positions) f.toggle(p);
    return f;
  }
  static LampConfig from_support(std::initializer_list<long long> positions) {
    return from_support(std::span<const long long>(positions.begin(), positions.size()));
  }

  bool empty() const { return lo_ > hi_; }
  long long min_pos() const {
    if (empty()) throw empty_support_error();
    return lo_;
  }
  long long max_pos() const {
    if (empty()) throw empty_support_error();
    return hi_;
  }
  /// diam(f) = M(f) - m(f); undefined on the zero configuration.
  long long diameter() const { return max_pos() - min_pos(); }

  std::size_t weight() const;
  bool parity() const { return (weight() & 1) != 0; }

  bool test(long long pos) const {
    if (pos < lo_ || pos > hi_) return false;
    const long long off = pos - anchor_;
    return (buf_[static_cast<std::size_t>(off / 64)] >> (off % 64)) & 1u;
  }

  void toggle(long long pos);
  void clear() {
    buf_.clear();
    anchor_ = 0;
    lo_ = 0;
    hi_ = -1;
  }

  /// f += x^shift * g  (GF(2) addition). Self-addition is allowed.
  void add_shifted(const LampConfig& g, long long shift);
  void add(const LampConfig& g) { add_shifted(g, 0); }

  /// f := x^s * f. O(1): pure rebase.
  void shift(long long s) {
    anchor_ += s;
    lo_ += s;
    hi_ += s;
  }

  /// a == x^s * b
  static bool translate_equal(const LampConfig& a, const LampConfig& b, long long s);

  std::vector<long long> support() const;

  template <typename Fn>
  void for_each_bit(Fn&& fn) const {
    if (empty()) return;
    long long w0 = floor_div(lo_ - anchor_, 64);
    long long w1 = floor_div(hi_ - anchor_, 64);
    for (long long w = w0; w <= w1; ++w) {
      bitops::Word v = buf_[static_cast<std::size_t>(w)];
      while (v != 0) {
        const int b = __builtin_ctzll(v);
        fn(anchor_ + 64 * w + b);
        v &= v - 1;
      }
    }
  }

  friend bool operator==(const LampConfig& a, const LampConfig& b) {
    return translate_equal(a, b, 0);
  }

  std::string to_string() const;  // "{-4,-3}", "{}" for zero

 private:
  static long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
    return q;
  }

  void reserve_bits(long long p_lo, long long p_hi);
  // 64 bits starting at `start`, zero-extended outside the buffer.
  bitops::Word window(long long start) const;
  long long find_set_at_or_after(long long p, long long limit) const;
  long long find_set_at_or_before(long long p, long long limit) const;
  void retighten(long long cand_lo, long long cand_hi);

  std::vector<bitops::Word> buf_;
  long long anchor_ = 0;  // position of bit 0 of buf_[0]
  long long lo_ = 0, hi_ = -1;
};

}  // namespace llq
