#include "cosetposet/gf2_matrix.hpp"

#include <algorithm>

namespace cosetposet {

BinaryMatrix::BinaryMatrix(std::vector<BitWord> rows, int n_cols)
    : rows_(std::move(rows)), n_cols_(n_cols) {
  if (n_cols_ < 1) throw Error("BinaryMatrix needs at least one column");
  if (n_cols_ > kMaxLength) {
    throw TooLargeError("BinaryMatrix wider than " + std::to_string(kMaxLength) + " columns");
  }
  for (const BitWord& r : rows_) {
    if (r.length() != n_cols_) {
      throw LengthMismatchError("BinaryMatrix rows must all have length n_cols");
    }
  }
}

BinaryMatrix BinaryMatrix::identity(int n) {
  std::vector<BitWord> rows;
  rows.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) rows.push_back(BitWord::unit(n, i));
  return BinaryMatrix(std::move(rows), n);
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
  if (rows.empty()) throw Error("from_strings: no rows");
  std::vector<BitWord> words;
  words.reserve(rows.size());
  for (const std::string& s : rows) words.push_back(BitWord::from_string(s));
  return BinaryMatrix(std::move(words), words.front().length());
}

BitWord BinaryMatrix::column(int c) const {
  BitWord col = BitWord::zero(n_rows());
  for (int r = 0; r < n_rows(); ++r) {
    if (at(r, c)) col.set_coordinate(r + 1);
  }
  return col;
}

std::vector<std::string> BinaryMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows_.size());
  for (const BitWord& r : rows_) out.push_back(r.to_string());
  return out;
}

RrefResult rref(const BinaryMatrix& m) {
  const int n = m.n_cols();
  std::vector<std::uint32_t> rows;
  rows.reserve(static_cast<std::size_t>(m.n_rows()));
  for (const BitWord& r : m.rows()) rows.push_back(r.bits());

  std::vector<int> pivot_cols;
  int rank = 0;
  for (int c = 1; c <= n && rank < static_cast<int>(rows.size()); ++c) {
    const std::uint32_t bit = 1u << (n - c);
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[static_cast<std::size_t>(r)] & bit) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[static_cast<std::size_t>(rank)], rows[static_cast<std::size_t>(pivot)]);
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r != rank && (rows[static_cast<std::size_t>(r)] & bit)) {
        rows[static_cast<std::size_t>(r)] ^= rows[static_cast<std::size_t>(rank)];
      }
    }
    pivot_cols.push_back(c);
    ++rank;
  }

  std::vector<BitWord> reduced;
  reduced.reserve(static_cast<std::size_t>(rank));
  for (int r = 0; r < rank; ++r) reduced.emplace_back(rows[static_cast<std::size_t>(r)], n);
  return RrefResult{BinaryMatrix(std::move(reduced), n), rank, std::move(pivot_cols)};
}

StandardFormResult standard_form(const BinaryMatrix& g) {
  RrefResult red = rref(g);
  if (red.rank < g.n_rows()) {
    throw RankDeficientError("standard_form: matrix has rank " + std::to_string(red.rank) +
                             " < " + std::to_string(g.n_rows()) + " rows");
  }
  const int n = g.n_cols();
  const int k = red.rank;

  // Pivot columns first, remaining columns in order.
  std::vector<int> image;
  image.reserve(static_cast<std::size_t>(n));
  std::vector<bool> is_pivot(static_cast<std::size_t>(n + 1), false);
  for (int c : red.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  for (int c : red.pivot_cols) image.push_back(c);
  for (int c = 1; c <= n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) image.push_back(c);
  }
  Permutation perm(std::move(image));
  BinaryMatrix std_form = permute_columns(red.reduced, perm);

  (void)k;
  return StandardFormResult{std::move(std_form), std::move(perm)};
}

BinaryMatrix parity_check_from_standard(const BinaryMatrix& std_form) {
  const int k = std_form.n_rows();
  const int n = std_form.n_cols();
  if (k >= n) throw NotStandardFormError("standard form requires k < n");
  for (int r = 0; r < k; ++r) {
    for (int c = 1; c <= k; ++c) {
      if (std_form.at(r, c) != (c == r + 1)) {
        throw NotStandardFormError("left block is not the identity");
      }
    }
  }

  // H row j: column j of A, then the unit vector e_j of length n-k.
  std::vector<BitWord> h_rows;
  h_rows.reserve(static_cast<std::size_t>(n - k));
  for (int j = 1; j <= n - k; ++j) {
    BitWord row = BitWord::zero(n);
    for (int r = 0; r < k; ++r) {
      if (std_form.at(r, k + j)) row.set_coordinate(r + 1);
    }
    row.set_coordinate(k + j);
    h_rows.push_back(row);
  }
  return BinaryMatrix(std::move(h_rows), n);
}

BinaryMatrix permute_columns(const BinaryMatrix& m, const Permutation& p) {
  if (p.size() != m.n_cols()) {
    throw SizeMismatchError("permute_columns: permutation size != n_cols");
  }
  std::vector<BitWord> rows;
  rows.reserve(static_cast<std::size_t>(m.n_rows()));
  for (const BitWord& r : m.rows()) rows.push_back(p.apply(r));
  return BinaryMatrix(std::move(rows), m.n_cols());
}

}  // namespace cosetposet
