// AVX2 variants of the GF(2) word kernels. Compiled unconditionally on
// x86-64 via function-level target attributes; selected at runtime only
// when the CPU reports AVX2.

#include "llq/bitops.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace llq::bitops {
namespace {

__attribute__((target("avx2"))) void xor_words_avx2(Word* dst, const Word* src,
                                                    std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
  }
  for (; i < n; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) void xor_shifted_avx2(Word* dst, const Word* src,
                                                      std::size_t n, unsigned s) {
  // dst[i] ^= (src[i] << s) | (src[i-1] >> (64-s)); dst[n] ^= src[n-1] >> (64-s)
  dst[0] ^= src[0] << s;
  std::size_t i = 1;
  const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
  const __m256i vr = _mm256_set1_epi64x(static_cast<long long>(kWordBits - s));
  for (; i + 4 <= n; i += 4) {
    __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i - 1));
    __m256i v = _mm256_or_si256(_mm256_sllv_epi64(cur, vs), _mm256_srlv_epi64(prev, vr));
    __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, v));
  }
  for (; i < n; ++i) dst[i] ^= (src[i] << s) | (src[i - 1] >> (kWordBits - s));
  dst[n] ^= src[n - 1] >> (kWordBits - s);
}

__attribute__((target("avx2"))) bool equal_avx2(const Word* a, const Word* b,
                                                std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(_mm256_xor_si256(va, vb), _mm256_xor_si256(va, vb)))
      return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

__attribute__((target("avx2"))) bool all_zero_avx2(const Word* p, std::size_t n) {
  std::size_t i = 0;
  __m256i acc = _mm256_setzero_si256();
  for (; i + 4 <= n; i += 4)
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + i)));
  if (!_mm256_testz_si256(acc, acc)) return false;
  Word tail = 0;
  for (; i < n; ++i) tail |= p[i];
  return tail == 0;
}

std::size_t popcount_plain(const Word* p, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(p[i]));
  return c;
}

constexpr Kernels kAvx2{"avx2",     xor_words_avx2, xor_shifted_avx2,
                        equal_avx2, all_zero_avx2,  popcount_plain};

}  // namespace

namespace detail {
const Kernels* avx2_kernels() {
  return __builtin_cpu_supports("avx2") ? &kAvx2 : nullptr;
}
}  // namespace detail

}  // namespace llq::bitops

#endif  // x86-64
