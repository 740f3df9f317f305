#pragma once

#include <string>
#include <vector>

#include "cosetposet/bitword.hpp"
#include "cosetposet/errors.hpp"
#include "cosetposet/permutation.hpp"

namespace cosetposet {

// Row-major matrix over GF(2); rows are packed words sharing one length.
// A zero-row matrix is allowed as the reduced form of the zero matrix.
class BinaryMatrix {
 public:
  BinaryMatrix(std::vector<BitWord> rows, int n_cols);

  static BinaryMatrix identity(int n);
  static BinaryMatrix from_strings(const std::vector<std::string>& rows);

  int n_rows() const { return static_cast<int>(rows_.size()); }
  int n_cols() const { return n_cols_; }
  const BitWord& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  const std::vector<BitWord>& rows() const { return rows_; }

  bool at(int r, int c) const { return row(r).has_coordinate(c); }  // c is 1-based

  // Column c as a word of length n_rows (row 1 = leftmost coordinate).
  BitWord column(int c) const;

  std::vector<std::string> to_strings() const;

  friend bool operator==(const BinaryMatrix& a, const BinaryMatrix& b) {
    return a.n_cols_ == b.n_cols_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<BitWord> rows_;
  int n_cols_;
};

struct RrefResult {
  BinaryMatrix reduced;         // unique RREF of the row space, zero rows dropped
  int rank;
  std::vector<int> pivot_cols;  // 1-based, strictly increasing
};

RrefResult rref(const BinaryMatrix& m);

struct StandardFormResult {
  BinaryMatrix std_form;  // [I_k | A]
  Permutation col_perm;   // std column j holds input column col_perm(j)
};

// Throws RankDeficientError when rank(g) < n_rows.
StandardFormResult standard_form(const BinaryMatrix& g);

// From [I_k | A] produces H = [A^T | I_{n-k}].  Throws NotStandardFormError.
BinaryMatrix parity_check_from_standard(const BinaryMatrix& std_form);

// Applies p to every row: output column i holds input column p(i).
BinaryMatrix permute_columns(const BinaryMatrix& m, const Permutation& p);

}  // namespace cosetposet
