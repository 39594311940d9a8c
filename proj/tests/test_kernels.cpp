#include <doctest.h>

#include <random>
#include <vector>

#include "gridobs/kernels.hpp"

using namespace gridobs;

// Direct per-bit model of the row recurrence r_i = p_i && (s_i || r_{i-1}).
static std::vector<std::uint64_t> smear_model(const std::vector<std::uint64_t>& P,
                                              const std::vector<std::uint64_t>& S) {
  std::vector<std::uint64_t> R(P.size(), 0);
  bool prev = false;
  for (std::size_t i = 0; i < P.size() * 64; ++i) {
    bool p = (P[i / 64] >> (i % 64)) & 1;
    bool s = (S[i / 64] >> (i % 64)) & 1;
    prev = p && (s || prev);
    if (prev) R[i / 64] |= std::uint64_t(1) << (i % 64);
  }
  return R;
}

TEST_CASE("all row kernels agree with the bitwise model") {
  auto kernels = available_row_kernels();
  REQUIRE(kernels.size() >= 2);
  std::mt19937_64 rng(777);
  for (int iter = 0; iter < 500; ++iter) {
    std::size_t words = 1 + rng() % 9;
    std::vector<std::uint64_t> P(words), S(words), R(words);
    // Mix dense and sparse masks so carries cross word boundaries.
    int shift = int(rng() % 3) * 2;
    for (auto& w : P) w = rng() & (rng() | (~std::uint64_t(0) >> shift));
    for (auto& w : S) w = rng() & rng() & rng();
    auto want = smear_model(P, S);
    for (auto* k : kernels) {
      std::fill(R.begin(), R.end(), 0xdeadbeefULL);
      k->smear(P.data(), S.data(), R.data(), words);
      CAPTURE(k->name);
      CHECK(R == want);
    }
  }
}

TEST_CASE("kernel edge patterns") {
  auto kernels = available_row_kernels();
  // A seed at bit 63 must smear across the word boundary into bit 64.
  std::vector<std::uint64_t> P{~std::uint64_t(0), 0x3};
  std::vector<std::uint64_t> S{std::uint64_t(1) << 63, 0};
  for (auto* k : kernels) {
    std::vector<std::uint64_t> R(2);
    k->smear(P.data(), S.data(), R.data(), 2);
    CAPTURE(k->name);
    CHECK(R[0] == (std::uint64_t(1) << 63));
    CHECK(R[1] == 0x3);
  }
  // Impassable cell stops the run.
  std::vector<std::uint64_t> P2{0b110111};
  std::vector<std::uint64_t> S2{0b000001};
  for (auto* k : kernels) {
    std::vector<std::uint64_t> R(1);
    k->smear(P2.data(), S2.data(), R.data(), 1);
    CAPTURE(k->name);
    CHECK(R[0] == 0b000111);
  }
}

TEST_CASE("kernel selection honours the environment override") {
  const RowKernel& k = active_row_kernel();
  auto avail = available_row_kernels();
  bool found = false;
  for (auto* a : avail) found = found || (a == &k);
  CHECK(found);
}
