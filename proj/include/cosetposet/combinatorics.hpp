#pragma once

#include <array>
#include <cstdint>

namespace cosetposet {

// Pascal's triangle up to kMaxLength + 1 rows; values fit easily in 64 bits.
inline constexpr int kBinomialRows = 25;

constexpr std::array<std::array<std::uint64_t, kBinomialRows>, kBinomialRows> make_binomials() {
  std::array<std::array<std::uint64_t, kBinomialRows>, kBinomialRows> c{};
  for (int i = 0; i < kBinomialRows; ++i) {
    c[static_cast<std::size_t>(i)][0] = 1;
    for (int j = 1; j <= i; ++j) {
      c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
          c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
  }
  return c;
}

inline constexpr auto kBinomials = make_binomials();

constexpr std::uint64_t binomial(int n, int w) {
  if (w < 0 || w > n || n < 0 || n >= kBinomialRows) return 0;
  return kBinomials[static_cast<std::size_t>(n)][static_cast<std::size_t>(w)];
}

// Next w-bit mask in ascending numeric order (Gosper's hack).
// Caller stops before running past binomial(n, w) masks.
inline std::uint32_t next_combination(std::uint32_t mask) {
  const std::uint32_t low = mask & (0u - mask);
  const std::uint32_t ripple = mask + low;
  return ripple | (((mask ^ ripple) >> 2) / low);
}

// The rank-th w-bit mask of width n in ascending numeric order
// (combinatorial number system, colex on bit positions), rank 0-based.
inline std::uint32_t unrank_combination(int n, int w, std::uint64_t rank) {
  std::uint32_t mask = 0;
  for (int i = w; i >= 1; --i) {
    int c = i - 1;
    while (c + 1 < n && binomial(c + 1, i) <= rank) ++c;
    mask |= 1u << c;
    rank -= binomial(c, i);
  }
  return mask;
}

}  // namespace cosetposet
