#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace llq::bitops {

using Word = std::uint64_t;
inline constexpr unsigned kWordBits = 64;

/// One set of word-level GF(2) kernels. `xor_shifted` applies
/// dst bits [s, s+64n) ^= src bits [0, 64n) for 0 < s < 64 and therefore
/// writes n+1 destination words; callers must provide that extra word.
struct Kernels {
  const char* name;
  void (*xor_words)(Word* dst, const Word* src, std::size_t n);
  void (*xor_shifted)(Word* dst, const Word* src, std::size_t n, unsigned s);
  bool (*equal)(const Word* a, const Word* b, std::size_t n);
  bool (*all_zero)(const Word* p, std::size_t n);
  std::size_t (*popcount)(const Word* p, std::size_t n);
};

/// Reference kernels, always available. All other implementations are
/// equivalence-tested against these.
const Kernels& scalar();

/// Best kernels the running CPU supports. Setting LLQ_FORCE_SCALAR=1 in the
/// environment pins the scalar path (checked once, at first use).
const Kernels& active();

/// Every kernel set runnable on this machine, scalar first.
std::vector<const Kernels*> available();

/// XORs `len` bits of `src` starting at bit offset `soff` into `dst`
/// starting at bit offset `doff`. Offsets are free-form; destination words
/// must be allocated by the caller.
void xor_bit_range(Word* dst, std::size_t doff, const Word* src,
                   std::size_t soff, std::size_t len);

}  // namespace llq::bitops
