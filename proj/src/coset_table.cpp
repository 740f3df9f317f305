#include "cosetposet/coset_table.hpp"

#include <algorithm>
#include <bit>

#include "cosetposet/combinatorics.hpp"

namespace cosetposet {
namespace {

// Syndrome contribution of each bit position: flipping bit b of a word
// toggles these syndrome bits.
std::vector<std::uint32_t> syndrome_columns(const LinearCode& code) {
  const int n = code.n;
  const int r = n - code.k;
  std::vector<std::uint32_t> col(static_cast<std::size_t>(n), 0);
  for (int j = 0; j < r; ++j) {
    const std::uint32_t row = code.parity_check.row(j).bits();
    for (int b = 0; b < n; ++b) {
      if ((row >> b) & 1u) col[static_cast<std::size_t>(b)] |= 1u << (r - 1 - j);
    }
  }
  return col;
}

std::uint32_t syndrome_bits(const std::vector<std::uint32_t>& col, std::uint32_t mask) {
  std::uint32_t s = 0;
  while (mask) {
    s ^= col[static_cast<std::size_t>(std::countr_zero(mask))];
    mask &= mask - 1;
  }
  return s;
}

}  // namespace

const Coset& CosetTable::coset_of(const BitWord& word) const {
  return cosets[static_cast<std::size_t>(index_of(syndrome(code, word)))];
}

CosetTable enumerate_cosets(const LinearCode& code) {
  const int n = code.n;
  const int r = n - code.k;
  const std::uint32_t bucket_count = 1u << r;
  const std::vector<std::uint32_t> col = syndrome_columns(code);

  struct Bucket {
    int weight = -1;
    std::vector<std::uint32_t> leaders;
  };
  std::vector<Bucket> buckets(bucket_count);
  std::uint32_t sealed = 0;

  for (int w = 0; w <= n && sealed < bucket_count; ++w) {
    const std::uint64_t total = binomial(n, w);
    // Chunk layout depends only on (n, w), never on the thread count.
    const int chunk_count =
        static_cast<int>(std::min<std::uint64_t>(256, (total + 4095) / 4096));
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> hits(
        static_cast<std::size_t>(chunk_count));

#pragma omp parallel for schedule(dynamic)
    for (int c = 0; c < chunk_count; ++c) {
      const std::uint64_t lo = total * static_cast<std::uint64_t>(c) /
                               static_cast<std::uint64_t>(chunk_count);
      const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) /
                               static_cast<std::uint64_t>(chunk_count);
      if (lo >= hi) continue;
      auto& local = hits[static_cast<std::size_t>(c)];
      std::uint32_t mask = unrank_combination(n, w, lo);
      for (std::uint64_t idx = lo; idx < hi; ++idx) {
        const std::uint32_t s = syndrome_bits(col, mask);
        if (buckets[s].weight < 0) local.emplace_back(s, mask);
        mask = next_combination(mask);
      }
    }

    // Ordered merge: chunks ascend, masks ascend within a chunk, so leader
    // lists come out ascending.
    for (const auto& local : hits) {
      for (const auto& [s, mask] : local) {
        Bucket& b = buckets[s];
        if (b.weight < 0) {
          b.weight = w;
          b.leaders.push_back(mask);
          ++sealed;
        } else if (b.weight == w) {
          b.leaders.push_back(mask);
        }
      }
    }
  }

  std::vector<Coset> cosets;
  cosets.reserve(bucket_count);
  for (std::uint32_t s = 0; s < bucket_count; ++s) {
    Coset coset;
    coset.syndrome = BitWord(s, r);
    coset.weight = buckets[s].weight;
    coset.leaders.reserve(buckets[s].leaders.size());
    for (std::uint32_t m : buckets[s].leaders) coset.leaders.emplace_back(m, n);
    cosets.push_back(std::move(coset));
  }
  std::sort(cosets.begin(), cosets.end(), [](const Coset& a, const Coset& b) {
    if (a.weight != b.weight) return a.weight < b.weight;
    return a.representative() < b.representative();
  });

  std::vector<std::int32_t> index(bucket_count, -1);
  for (std::size_t i = 0; i < cosets.size(); ++i) {
    index[cosets[i].syndrome.bits()] = static_cast<std::int32_t>(i);
  }
  return CosetTable{code, std::move(cosets), std::move(index)};
}

int covering_radius(const CosetTable& table) {
  return table.cosets.back().weight;
}

int covering_radius_bruteforce(const LinearCode& code) {
  const std::uint32_t space = 1u << code.n;
  const std::size_t m = code.codewords.size();
  std::vector<std::uint32_t> words(m);
  for (std::size_t i = 0; i < m; ++i) words[i] = code.codewords[i].bits();

  int radius = 0;
#pragma omp parallel for reduction(max : radius) schedule(static)
  for (std::int64_t x = 0; x < static_cast<std::int64_t>(space); ++x) {
    int best = kMaxLength + 1;
    for (std::size_t i = 0; i < m; ++i) {
      const int d = std::popcount(static_cast<std::uint32_t>(x) ^ words[i]);
      if (d < best) {
        best = d;
        if (best == 0) break;
      }
    }
    if (best > radius) radius = best;
  }
  return radius;
}

}  // namespace cosetposet
