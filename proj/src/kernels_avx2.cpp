// AVX2 variant of the row smear. The seed/passable combine runs 256 bits
// at a time; the add-based run propagation keeps its word-serial carry,
// which only crosses a lane when the top cell of a word is reachable.
#if defined(__x86_64__)

#include <immintrin.h>

#include "gridobs/kernels.hpp"

namespace gridobs::kernels {

static inline std::uint64_t smear_word(std::uint64_t p, std::uint64_t s) {
  s &= p;
  return (((s + p) ^ p) & p) | s;
}

__attribute__((target("avx2"))) void smear_avx2(const std::uint64_t* P,
                                                const std::uint64_t* S,
                                                std::uint64_t* R,
                                                std::size_t words) {
  std::size_t w = 0;
  std::uint64_t carry = 0;
  alignas(32) std::uint64_t sp[4];
  for (; w + 4 <= words; w += 4) {
    __m256i p = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(P + w));
    __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(S + w));
    _mm256_store_si256(reinterpret_cast<__m256i*>(sp), _mm256_and_si256(s, p));
    for (int i = 0; i < 4; ++i) {
      std::uint64_t r = smear_word(P[w + i], sp[i] | carry);
      R[w + i] = r;
      carry = r >> 63;
    }
  }
  for (; w < words; ++w) {
    std::uint64_t r = smear_word(P[w], S[w] | carry);
    R[w] = r;
    carry = r >> 63;
  }
}

}  // namespace gridobs::kernels

#endif  // __x86_64__
