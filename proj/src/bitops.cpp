#include "llq/bitops.hpp"

#include <cstdlib>

#if defined(__aarch64__) || defined(__ARM_NEON)
#include <arm_neon.h>
#define LLQ_HAVE_NEON 1
#endif

namespace llq::bitops {

namespace {

void xor_words_scalar(Word* dst, const Word* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

void xor_shifted_scalar(Word* dst, const Word* src, std::size_t n, unsigned s) {
  Word carry = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Word v = src[i];
    dst[i] ^= (v << s) | carry;
    carry = v >> (kWordBits - s);
  }
  dst[n] ^= carry;
}

bool equal_scalar(const Word* a, const Word* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool all_zero_scalar(const Word* p, std::size_t n) {
  Word acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= p[i];
  return acc == 0;
}

std::size_t popcount_scalar(const Word* p, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(p[i]));
  return c;
}

constexpr Kernels kScalar{"scalar",       xor_words_scalar, xor_shifted_scalar,
                          equal_scalar,   all_zero_scalar,  popcount_scalar};

#ifdef LLQ_HAVE_NEON
void xor_words_neon(Word* dst, const Word* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    uint64x2_t d = vld1q_u64(dst + i);
    uint64x2_t s = vld1q_u64(src + i);
    vst1q_u64(dst + i, veorq_u64(d, s));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

bool all_zero_neon(const Word* p, std::size_t n) {
  std::size_t i = 0;
  uint64x2_t acc = vdupq_n_u64(0);
  for (; i + 2 <= n; i += 2) acc = vorrq_u64(acc, vld1q_u64(p + i));
  Word tail = 0;
  for (; i < n; ++i) tail |= p[i];
  return (vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1) | tail) == 0;
}

constexpr Kernels kNeon{"neon",       xor_words_neon, xor_shifted_scalar,
                        equal_scalar, all_zero_neon,  popcount_scalar};
#endif

bool force_scalar_env() {
  const char* v = std::getenv("LLQ_FORCE_SCALAR");
  return v != nullptr && v[0] != '\0' && v[0] != '0';
}

}  // namespace

#if defined(__x86_64__) || defined(_M_X64)
namespace detail {
const Kernels* avx2_kernels();  // bitops_avx2.cpp
}
#endif

const Kernels& scalar() { return kScalar; }

const Kernels& active() {
  static const Kernels* chosen = [] {
    if (force_scalar_env()) return &kScalar;
    const Kernels* best = &kScalar;
#if defined(__x86_64__) || defined(_M_X64)
    if (const Kernels* k = detail::avx2_kernels()) best = k;
#elif defined(LLQ_HAVE_NEON)
    best = &kNeon;
#endif
    return best;
  }();
  return *chosen;
}

std::vector<const Kernels*> available() {
  std::vector<const Kernels*> out{&kScalar};
#if defined(__x86_64__) || defined(_M_X64)
  if (const Kernels* k = detail::avx2_kernels()) out.push_back(k);
#elif defined(LLQ_HAVE_NEON)
  out.push_back(&kNeon);
#endif
  return out;
}

void xor_bit_range(Word* dst, std::size_t doff, const Word* src,
                   std::size_t soff, std::size_t len) {
  // Word-at-a-time funnel gather from src into dst-aligned chunks.
  while (len > 0) {
    const std::size_t dw = doff / kWordBits;
    const unsigned db = static_cast<unsigned>(doff % kWordBits);
    const std::size_t chunk = std::min<std::size_t>(len, kWordBits - db);

    const std::size_t sw = soff / kWordBits;
    const unsigned sb = static_cast<unsigned>(soff % kWordBits);
    Word v = src[sw] >> sb;
    if (sb != 0 && sb + chunk > kWordBits) v |= src[sw + 1] << (kWordBits - sb);
    if (chunk < kWordBits) v &= (Word(1) << chunk) - 1;

    dst[dw] ^= v << db;
    doff += chunk;
    soff += chunk;
    len -= chunk;
  }
}

}  // namespace llq::bitops
