#include "llq/lamp_config.hpp"

#include <algorithm>

namespace llq {

using bitops::Word;

std::size_t LampConfig::weight() const {
  if (empty()) return 0;
  const long long w0 = floor_div(lo_ - anchor_, 64);
  const long long w1 = floor_div(hi_ - anchor_, 64);
  return bitops::active().popcount(buf_.data() + w0, static_cast<std::size_t>(w1 - w0 + 1));
}

void LampConfig::reserve_bits(long long p_lo, long long p_hi) {
  if (buf_.empty()) {
    anchor_ = p_lo - 64;
    const long long words = floor_div(p_hi - anchor_, 64) + 2;
    buf_.assign(static_cast<std::size_t>(words), 0);
    return;
  }
  const long long cur = static_cast<long long>(buf_.size());
  const long long wlo = floor_div(p_lo - anchor_, 64);
  const long long whi = floor_div(p_hi - anchor_, 64);
  if (wlo >= 0 && whi < cur) return;

  long long nlo = std::min(wlo, 0LL);
  long long nhi = std::max(whi, cur - 1);
  const long long span = nhi - nlo + 1;
  if (wlo < 0) nlo -= span;       // geometric slack on the growing side
  if (whi >= cur) nhi += span;
  std::vector<Word> nb(static_cast<std::size_t>(nhi - nlo + 1), 0);
  std::copy(buf_.begin(), buf_.end(), nb.begin() + static_cast<std::size_t>(-nlo));
  buf_ = std::move(nb);
  anchor_ += 64 * nlo;
}

Word LampConfig::window(long long start) const {
  const long long n = static_cast<long long>(buf_.size());
  const long long off = start - anchor_;
  if (off >= 64 * n || off + 64 <= 0) return 0;
  const long long wi = floor_div(off, 64);
  const unsigned b = static_cast<unsigned>(off - 64 * wi);
  const Word low = (wi >= 0 && wi < n) ? buf_[static_cast<std::size_t>(wi)] : 0;
  if (b == 0) return low;
  const Word high = (wi + 1 >= 0 && wi + 1 < n) ? buf_[static_cast<std::size_t>(wi + 1)] : 0;
  return (low >> b) | (high << (64 - b));
}

long long LampConfig::find_set_at_or_after(long long p, long long limit) const {
  long long w = floor_div(p - anchor_, 64);
  const long long w1 = floor_div(limit - anchor_, 64);
  while (w <= w1) {
    Word v = buf_[static_cast<std::size_t>(w)];
    if (w * 64 < p - anchor_) v &= ~Word(0) << ((p - anchor_) - 64 * w);
    if (v != 0) {
      const long long pos = anchor_ + 64 * w + __builtin_ctzll(v);
      return pos <= limit ? pos : limit + 1;
    }
    ++w;
  }
  return limit + 1;
}

long long LampConfig::find_set_at_or_before(long long p, long long limit) const {
  long long w = floor_div(p - anchor_, 64);
  const long long w0 = floor_div(limit - anchor_, 64);
  while (w >= w0) {
    Word v = buf_[static_cast<std::size_t>(w)];
    const long long top = p - anchor_ - 64 * w;
    if (top < 63) v &= (top < 0) ? 0 : ((Word(2) << top) - 1);
    if (v != 0) {
      const long long pos = anchor_ + 64 * w + (63 - __builtin_clzll(v));
      return pos >= limit ? pos : limit - 1;
    }
    --w;
  }
  return limit - 1;
}

void LampConfig::retighten(long long cand_lo, long long cand_hi) {
  const long long nlo = find_set_at_or_after(cand_lo, cand_hi);
  if (nlo > cand_hi) {
    lo_ = 0;
    hi_ = -1;
    return;
  }
  lo_ = nlo;
  hi_ = find_set_at_or_before(cand_hi, nlo);
}

void LampConfig::toggle(long long pos) {
  reserve_bits(pos, pos);
  const long long off = pos - anchor_;
  buf_[static_cast<std::size_t>(off / 64)] ^= Word(1) << (off % 64);
  if (empty()) {
    lo_ = hi_ = pos;
    return;
  }
  if (pos < lo_) {
    lo_ = pos;
    return;
  }
  if (pos > hi_) {
    hi_ = pos;
    return;
  }
  if (!test(pos)) {  // endpoint may have been switched off
    if (lo_ == hi_) {
      lo_ = 0;
      hi_ = -1;
    } else if (pos == lo_) {
      lo_ = find_set_at_or_after(pos + 1, hi_);
    } else if (pos == hi_) {
      hi_ = find_set_at_or_before(pos - 1, lo_);
    }
  }
}

void LampConfig::add_shifted(const LampConfig& g, long long s) {
  if (g.empty()) return;
  if (this == &g) {
    LampConfig copy = g;
    add_shifted(copy, s);
    return;
  }
  const long long src_w0 = floor_div(g.lo_ - g.anchor_, 64);
  const long long src_w1 = floor_div(g.hi_ - g.anchor_, 64);
  const std::size_t nsrc = static_cast<std::size_t>(src_w1 - src_w0 + 1);
  const long long dst_start = g.anchor_ + 64 * src_w0 + s;
  reserve_bits(dst_start, dst_start + 64 * static_cast<long long>(nsrc + 1) - 1);

  const long long off = dst_start - anchor_;
  const long long wi = off / 64;
  const unsigned b = static_cast<unsigned>(off % 64);
  const auto& k = bitops::active();
  if (b == 0)
    k.xor_words(buf_.data() + wi, g.buf_.data() + src_w0, nsrc);
  else
    k.xor_shifted(buf_.data() + wi, g.buf_.data() + src_w0, nsrc, b);

  const long long cand_lo = empty() ? g.lo_ + s : std::min(lo_, g.lo_ + s);
  const long long cand_hi = empty() ? g.hi_ + s : std::max(hi_, g.hi_ + s);
  retighten(cand_lo, cand_hi);
}

bool LampConfig::translate_equal(const LampConfig& a, const LampConfig& b, long long s) {
  if (a.empty() || b.empty()) return a.empty() && b.empty();
  if (a.lo_ != b.lo_ + s || a.hi_ != b.hi_ + s) return false;
  for (long long p = a.lo_; p <= a.hi_; p += 64)
    if (a.window(p) != b.window(p - s)) return false;
  return true;
}

std::vector<long long> LampConfig::support() const {
  std::vector<long long> out;
  out.reserve(weight());
  for_each_bit([&](long long p) { out.push_back(p); });
  return out;
}

std::string LampConfig::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each_bit([&](long long p) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  });
  s += '}';
  return s;
}

}  // namespace llq
