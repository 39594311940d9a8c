#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gridobs {

// Row-reachability smear: the inner loop of the dense visibility DP.
//
// A row of cells is given as bit masks packed into 64-bit words, bit i of
// word w = cell 64*w+i. P marks passable cells, S marks cells seeded from
// the previous row (or the start cell). The kernel computes R, the cells
// reachable by rightward (increasing bit index) propagation through
// passable cells: r_i = p_i && (s_i || r_{i-1}).
struct RowKernel {
  const char* name;
  void (*smear)(const std::uint64_t* P, const std::uint64_t* S, std::uint64_t* R,
                std::size_t words);
};

// Kernel selected at runtime: best available for the host CPU, overridable
// with environment variable GRIDOBS_KERNEL=scalar|bits64|avx2.
const RowKernel& active_row_kernel();

// Every kernel usable on this host (for equivalence tests).
std::vector<const RowKernel*> available_row_kernels();

namespace kernels {
void smear_scalar(const std::uint64_t* P, const std::uint64_t* S, std::uint64_t* R,
                  std::size_t words);
void smear_bits64(const std::uint64_t* P, const std::uint64_t* S, std::uint64_t* R,
                  std::size_t words);
#if defined(__x86_64__)
bool avx2_supported();
void smear_avx2(const std::uint64_t* P, const std::uint64_t* S, std::uint64_t* R,
                std::size_t words);
#endif
}  // namespace kernels

}  // namespace gridobs
