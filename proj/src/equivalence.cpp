#include "cosetposet/equivalence.hpp"

#include <algorithm>
#include <numeric>

namespace cosetposet {

LinearCode apply_permutation(const LinearCode& code, const Permutation& p) {
  if (p.size() != code.n) {
    throw SizeMismatchError("apply_permutation: permutation size != n");
  }
  std::vector<BitWord> rows;
  rows.reserve(static_cast<std::size_t>(code.k));
  for (const BitWord& r : code.generator.rows()) rows.push_back(p.apply(r));
  return build_code(BinaryMatrix(std::move(rows), code.n));
}

namespace {

// Per-coordinate profile: how many codewords of each weight have a 1 there.
// Invariant under coordinate permutation.
std::vector<std::vector<int>> column_signatures(const LinearCode& code) {
  std::vector<std::vector<int>> sig(
      static_cast<std::size_t>(code.n),
      std::vector<int>(static_cast<std::size_t>(code.n + 1), 0));
  for (const BitWord& c : code.codewords) {
    const int w = c.weight();
    for (int j = 1; j <= code.n; ++j) {
      if (c.has_coordinate(j)) ++sig[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(w)];
    }
  }
  return sig;
}

std::vector<std::vector<int>> pair_counts(const LinearCode& code) {
  std::vector<std::vector<int>> cnt(
      static_cast<std::size_t>(code.n),
      std::vector<int>(static_cast<std::size_t>(code.n), 0));
  for (const BitWord& c : code.codewords) {
    const std::vector<int> supp = c.support();
    for (std::size_t a = 0; a < supp.size(); ++a) {
      for (std::size_t b = 0; b < supp.size(); ++b) {
        ++cnt[static_cast<std::size_t>(supp[a] - 1)][static_cast<std::size_t>(supp[b] - 1)];
      }
    }
  }
  return cnt;
}

struct EquivalenceSearch {
  const LinearCode& c;
  const LinearCode& d;
  std::vector<std::vector<int>> cand;  // per d-coordinate (0-based), c-coordinates (1-based)
  std::vector<std::vector<int>> cnt_c;
  std::vector<std::vector<int>> cnt_d;
  std::vector<int> order;   // d-coordinates (1-based), fewest candidates first
  std::vector<int> image;   // image[i-1] = pi(i), 0 = unassigned
  std::vector<bool> taken;  // c-coordinates already used

  bool matches(const Permutation& p) const {
    std::vector<std::uint32_t> mapped;
    mapped.reserve(c.codewords.size());
    for (const BitWord& u : c.codewords) mapped.push_back(p.apply(u).bits());
    std::sort(mapped.begin(), mapped.end());
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      if (mapped[i] != d.codewords[i].bits()) return false;
    }
    return true;
  }

  bool assign(std::size_t depth) {
    if (depth == order.size()) {
      return matches(Permutation(image));
    }
    const int i = order[depth];
    for (int j : cand[static_cast<std::size_t>(i - 1)]) {
      if (taken[static_cast<std::size_t>(j - 1)]) continue;
      bool ok = true;
      for (std::size_t prev = 0; prev < depth; ++prev) {
        const int i2 = order[prev];
        const int j2 = image[static_cast<std::size_t>(i2 - 1)];
        if (cnt_d[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i2 - 1)] !=
            cnt_c[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(j2 - 1)]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      image[static_cast<std::size_t>(i - 1)] = j;
      taken[static_cast<std::size_t>(j - 1)] = true;
      if (assign(depth + 1)) return true;
      image[static_cast<std::size_t>(i - 1)] = 0;
      taken[static_cast<std::size_t>(j - 1)] = false;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> permutation_equivalent(const LinearCode& c, const LinearCode& d) {
  if (c.n != d.n || c.k != d.k) return std::nullopt;
  if (weight_enumerator(c) != weight_enumerator(d)) return std::nullopt;
  if (c.n > kMaxEquivalenceLength) {
    throw TooLargeError("permutation_equivalent: search bounded to n <= " +
                        std::to_string(kMaxEquivalenceLength));
  }

  const auto sig_c = column_signatures(c);
  const auto sig_d = column_signatures(d);
  EquivalenceSearch search{c,
                           d,
                           {},
                           pair_counts(c),
                           pair_counts(d),
                           {},
                           std::vector<int>(static_cast<std::size_t>(c.n), 0),
                           std::vector<bool>(static_cast<std::size_t>(c.n), false)};
  search.cand.resize(static_cast<std::size_t>(c.n));
  for (int i = 1; i <= c.n; ++i) {
    for (int j = 1; j <= c.n; ++j) {
      if (sig_d[static_cast<std::size_t>(i - 1)] == sig_c[static_cast<std::size_t>(j - 1)]) {
        search.cand[static_cast<std::size_t>(i - 1)].push_back(j);
      }
    }
    if (search.cand[static_cast<std::size_t>(i - 1)].empty()) return std::nullopt;
  }

  search.order.resize(static_cast<std::size_t>(c.n));
  std::iota(search.order.begin(), search.order.end(), 1);
  std::sort(search.order.begin(), search.order.end(), [&](int a, int b) {
    const std::size_t sa = search.cand[static_cast<std::size_t>(a - 1)].size();
    const std::size_t sb = search.cand[static_cast<std::size_t>(b - 1)].size();
    if (sa != sb) return sa < sb;
    return a < b;
  });

  if (!search.assign(0)) return std::nullopt;
  Permutation pi(search.image);
  if (!search.matches(pi)) {
    throw Error("permutation_equivalent: unverified permutation escaped the search");
  }
  return pi;
}

}  // namespace cosetposet
