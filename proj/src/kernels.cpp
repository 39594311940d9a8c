#include "gridobs/kernels.hpp"

#include <cstdlib>
#include <cstring>

#if defined(__x86_64__)
#include <cpuid.h>
#endif

namespace gridobs {
namespace kernels {

void smear_scalar(const std::uint64_t* P, const std::uint64_t* S, std::uint64_t* R,
                  std::size_t words) {
  bool carry = false;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t r = 0;
    for (int b = 0; b < 64; ++b) {
      std::uint64_t bit = std::uint64_t(1) << b;
      bool p = P[w] & bit;
      bool s = S[w] & bit;
      carry = p && (s || carry);
      if (carry) r |= bit;
    }
    R[w] = r;
  }
}

// Carry-propagation trick: adding the seeds to the passable mask flips
// exactly the passable bits above each seed within its contiguous run.
static inline std::uint64_t smear_word(std::uint64_t p, std::uint64_t s) {
  s &= p;
  return (((s + p) ^ p) & p) | s;
}

void smear_bits64(const std::uint64_t* P, const std::uint64_t* S, std::uint64_t* R,
                  std::size_t words) {
  std::uint64_t carry = 0;  // bit 0 set iff last cell of previous word reachable
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t r = smear_word(P[w], S[w] | carry);
    R[w] = r;
    carry = r >> 63;
  }
}

#if defined(__x86_64__)
bool avx2_supported() {
  unsigned a, b, c, d;
  if (!__get_cpuid_count(7, 0, &a, &b, &c, &d)) return false;
  return (b & (1u << 5)) != 0;  // EBX bit 5 = AVX2
}
#endif

}  // namespace kernels

static const RowKernel kScalar{"scalar", kernels::smear_scalar};
static const RowKernel kBits64{"bits64", kernels::smear_bits64};
#if defined(__x86_64__)
static const RowKernel kAvx2{"avx2", kernels::smear_avx2};
#endif

std::vector<const RowKernel*> available_row_kernels() {
  std::vector<const RowKernel*> v{&kScalar, &kBits64};
#if defined(__x86_64__)
  if (kernels::avx2_supported()) v.push_back(&kAvx2);
#endif
  return v;
}

const RowKernel& active_row_kernel() {
  static const RowKernel* chosen = [] {
    const char* want = std::getenv("GRIDOBS_KERNEL");
    auto avail = available_row_kernels();
    if (want) {
      for (auto* k : avail)
        if (std::strcmp(k->name, want) == 0) return k;
    }
    return avail.back();
  }();
  return *chosen;
}

}  // namespace gridobs
