#include "cosetposet/reference.hpp"

#include <algorithm>
#include <bit>

#include "cosetposet/graph_analysis.hpp"

namespace cosetposet::ref {

CosetTable enumerate_cosets(const LinearCode& code) {
  const int n = code.n;
  const int r = n - code.k;
  const std::uint32_t space = 1u << n;
  const std::uint32_t bucket_count = 1u << r;

  // Syndromes of all words via the subset-XOR recurrence.
  std::vector<std::uint32_t> synd(space, 0);
  std::vector<std::uint32_t> col(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < n; ++b) {
    col[static_cast<std::size_t>(b)] =
        syndrome(code, BitWord(1u << b, n)).bits();
  }
  for (std::uint32_t x = 1; x < space; ++x) {
    synd[x] = synd[x & (x - 1)] ^ col[static_cast<std::size_t>(std::countr_zero(x))];
  }

  std::vector<int> min_weight(bucket_count, n + 1);
  for (std::uint32_t x = 0; x < space; ++x) {
    min_weight[synd[x]] = std::min(min_weight[synd[x]], std::popcount(x));
  }

  std::vector<Coset> cosets(bucket_count);
  for (std::uint32_t s = 0; s < bucket_count; ++s) {
    cosets[s].syndrome = BitWord(s, r);
    cosets[s].weight = min_weight[s];
  }
  for (std::uint32_t x = 0; x < space; ++x) {
    if (std::popcount(x) == min_weight[synd[x]]) {
      cosets[synd[x]].leaders.emplace_back(x, n);
    }
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

int covering_radius_bruteforce(const LinearCode& code) {
  const std::uint32_t space = 1u << code.n;
  int radius = 0;
  for (std::uint32_t x = 0; x < space; ++x) {
    int best = code.n + 1;
    for (const BitWord& c : code.codewords) {
      best = std::min(best, std::popcount(x ^ c.bits()));
      if (best == 0) break;
    }
    radius = std::max(radius, best);
  }
  return radius;
}

std::vector<std::pair<int, int>> hasse_edges(const CosetTable& table) {
  std::vector<std::pair<int, int>> edges;
  const int v = table.vertex_count();
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      const Coset& lo = table.cosets[static_cast<std::size_t>(a)];
      const Coset& hi = table.cosets[static_cast<std::size_t>(b)];
      if (lo.weight != hi.weight - 1) continue;
      if (strictly_precedes(lo, hi)) edges.emplace_back(a, b);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("ref::diameter: graph is disconnected");
  int best = 0;
  for (int src = 0; src < g.vertex_count; ++src) {
    const std::vector<int> dist = bfs_distances(g, src);
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

}  // namespace cosetposet::ref
