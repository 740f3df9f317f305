#include "cosetposet/linear_code.hpp"

#include <algorithm>
#include <bit>

namespace cosetposet {

LinearCode build_code(const BinaryMatrix& g) {
  const int n = g.n_cols();
  const int k = g.n_rows();
  if (k < 1) throw Error("build_code: generator needs at least one row");
  if (n > kMaxLength) {
    throw TooLargeError("build_code: n > " + std::to_string(kMaxLength));
  }
  RrefResult red = rref(g);
  if (red.rank < k) {
    throw RankDeficientError("build_code: generator rows are linearly dependent");
  }
  if (k >= n) {
    throw NotProperSubspaceError("build_code: k = n gives the full space, not a proper code");
  }

  // Parity check: standard form of the generator, H for that form, then the
  // columns moved back so H annihilates the original row space.
  StandardFormResult sf = standard_form(g);
  BinaryMatrix h_std = parity_check_from_standard(sf.std_form);
  BinaryMatrix h = permute_columns(h_std, sf.col_perm.inverse());

  std::vector<BitWord> codewords;
  codewords.reserve(1u << k);
  for (std::uint32_t sel = 0; sel < (1u << k); ++sel) {
    std::uint32_t bits = 0;
    for (int r = 0; r < k; ++r) {
      if ((sel >> r) & 1u) bits ^= g.row(r).bits();
    }
    codewords.emplace_back(bits, n);
  }
  std::sort(codewords.begin(), codewords.end());

  return LinearCode{n, k, g, std::move(h), std::move(codewords)};
}

BitWord syndrome(const LinearCode& code, const BitWord& y) {
  if (y.length() != code.n) {
    throw LengthMismatchError("syndrome: word length != n");
  }
  const int r = code.n - code.k;
  BitWord s = BitWord::zero(r);
  for (int j = 1; j <= r; ++j) {
    if (std::popcount(code.parity_check.row(j - 1).bits() & y.bits()) & 1) {
      s.set_coordinate(j);
    }
  }
  return s;
}

int minimum_distance(const LinearCode& code) {
  int best = code.n + 1;
  for (const BitWord& c : code.codewords) {
    if (!c.is_zero()) best = std::min(best, c.weight());
  }
  return best;
}

std::vector<std::uint64_t> weight_enumerator(const LinearCode& code) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(code.n + 1), 0);
  for (const BitWord& c : code.codewords) {
    ++counts[static_cast<std::size_t>(c.weight())];
  }
  return counts;
}

}  // namespace cosetposet
