#include "llq/binomial.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace llq {

using bitops::Word;

namespace {
std::size_t ring_words(long long d) { return static_cast<std::size_t>((d + 63) / 64); }
}  // namespace

bool Residues::is_zero() const {
  if (modulus == 0) return line.empty();
  return bitops::active().all_zero(ring.data(), ring.size());
}

bool Residues::test(long long r) const {
  return (ring[static_cast<std::size_t>(r / 64)] >> (r % 64)) & 1u;
}

std::size_t Residues::weight() const {
  if (modulus == 0) return line.weight();
  return bitops::active().popcount(ring.data(), ring.size());
}

Residues Residues::rotated(long long s) const {
  Residues out;
  out.modulus = modulus;
  if (modulus == 0) {
    out.line = line;
    out.line.shift(s);
    return out;
  }
  const long long d = modulus;
  const long long r = ((s % d) + d) % d;
  out.ring.assign(ring_words(d), 0);
  if (r == 0) {
    out.ring = ring;
    return out;
  }
  // bits [0, d-r) -> [r, d); bits [d-r, d) -> [0, r)
  bitops::xor_bit_range(out.ring.data(), static_cast<std::size_t>(r), ring.data(), 0,
                        static_cast<std::size_t>(d - r));
  bitops::xor_bit_range(out.ring.data(), 0, ring.data(), static_cast<std::size_t>(d - r),
                        static_cast<std::size_t>(r));
  return out;
}

void Residues::add(const Residues& other) {
  if (modulus != other.modulus) throw std::invalid_argument("modulus mismatch");
  if (modulus == 0)
    line.add(other.line);
  else
    bitops::active().xor_words(ring.data(), other.ring.data(), ring.size());
}

bool operator==(const Residues& a, const Residues& b) {
  if (a.modulus != b.modulus) return false;
  if (a.modulus == 0) return a.line == b.line;
  return bitops::active().equal(a.ring.data(), b.ring.data(), a.ring.size());
}

Residues project(const LampConfig& f, long long d) {
  Residues out;
  out.modulus = d;
  if (d == 0) {
    out.line = f;
    return out;
  }
  out.ring.assign(ring_words(d), 0);
  f.for_each_bit([&](long long p) {
    const long long r = ((p % d) + d) % d;
    out.ring[static_cast<std::size_t>(r / 64)] ^= Word(1) << (r % 64);
  });
  return out;
}

LampConfig mul_poly(const LampConfig& a, const LampConfig& b) {
  LampConfig out;
  const LampConfig& small = a.weight() <= b.weight() ? a : b;
  const LampConfig& large = a.weight() <= b.weight() ? b : a;
  small.for_each_bit([&](long long p) { out.add_shifted(large, p); });
  return out;
}

BezoutCombination bezout_binomials(std::span<const long long> moduli) {
  const std::size_t k = moduli.size();
  bool any = false;
  for (long long b : moduli) any = any || b != 0;
  if (!any) throw std::invalid_argument("bezout_binomials: all moduli are zero");

  // Fold the inputs through Euclid on exponents. State: value m with
  // coefficient vector cm such that sum_i cm[i] (x^{|b_i|}-1) = x^m - 1.
  long long m = 0;
  std::vector<LampConfig> cm(k);
  for (std::size_t i = 0; i < k; ++i) {
    const long long b = std::llabs(moduli[i]);
    if (b == 0) continue;
    if (m == 0) {
      m = b;
      cm[i].toggle(0);
      continue;
    }
    long long n = b;
    std::vector<LampConfig> cn(k);
    cn[i].toggle(0);
    // x^m-1 = Q (x^n-1) + (x^r-1) with Q = sum_{j=1..q} x^{m-jn}, so the
    // coefficients of x^r-1 are cm + Q*cn; then rotate (m,n) <- (n,r).
    while (n != 0) {
      const long long q = m / n;
      const long long r = m % n;
      for (std::size_t t = 0; t < k; ++t)
        for (long long j = 1; j <= q; ++j) cm[t].add_shifted(cn[t], m - j * n);
      std::swap(cm, cn);  // cm <- coeffs of x^n-1, cn <- coeffs of x^r-1
      m = n;
      n = r;
    }
  }

  BezoutCombination out;
  out.moduli.assign(moduli.begin(), moduli.end());
  out.gcd = m;
  out.coeffs = std::move(cm);
  // Negative inputs: x^{|b|}-1 = x^{|b|} (x^{b}-1) over GF(2).
  for (std::size_t i = 0; i < k; ++i)
    if (moduli[i] < 0) out.coeffs[i].shift(-moduli[i]);

  // The combination is verified by expansion, never trusted.
  LampConfig check;
  for (std::size_t i = 0; i < k; ++i) {
    check.add_shifted(out.coeffs[i], moduli[i]);
    check.add(out.coeffs[i]);
  }
  LampConfig expect;
  expect.toggle(0);
  expect.toggle(out.gcd);
  if (!(check == expect)) throw std::logic_error("bezout_binomials: identity check failed");
  return out;
}

LampConfig divide_by_binomial(const LampConfig& h, long long d) {
  if (d <= 0) throw std::invalid_argument("divide_by_binomial: modulus must be positive");
  LampConfig q;
  if (h.empty()) return q;
  LampConfig cur = h;
  const long long top = h.max_pos();
  while (!cur.empty()) {
    const long long p = cur.min_pos();
    if (p > top - d) throw not_in_kernel("divide_by_binomial: not divisible by x^d - 1");
    q.toggle(p);
    cur.toggle(p);
    cur.toggle(p + d);
  }
  return q;
}

std::vector<LampConfig> lift_certificate(std::span<const long long> moduli,
                                         const LampConfig& target) {
  const std::size_t k = moduli.size();
  long long d = 0;
  for (long long b : moduli) d = std::gcd(d, b);
  std::vector<LampConfig> parts(k);
  if (d == 0) {
    if (!target.empty())
      throw not_in_kernel("lift_certificate: all moduli zero but target nonzero");
    return parts;
  }
  if (target.empty()) return parts;

  const LampConfig q = divide_by_binomial(target, d);
  const BezoutCombination bez = bezout_binomials(moduli);
  for (std::size_t i = 0; i < k; ++i) parts[i] = mul_poly(bez.coeffs[i], q);

  LampConfig check;
  for (std::size_t i = 0; i < k; ++i) {
    check.add(parts[i]);
    check.add_shifted(parts[i], moduli[i]);
  }
  if (!(check == target)) throw std::logic_error("lift_certificate: expansion check failed");
  return parts;
}

}  // namespace llq
