#pragma once

#include <cstdint>
#include <vector>

#include "cosetposet/bitword.hpp"
#include "cosetposet/gf2_matrix.hpp"

namespace cosetposet {

// A validated [n,k] binary linear code with its full codeword list.
struct LinearCode {
  int n = 0;
  int k = 0;
  BinaryMatrix generator;     // k x n, full row rank
  BinaryMatrix parity_check;  // (n-k) x n, annihilates the generator's row space
  std::vector<BitWord> codewords;  // all 2^k row-space elements, ascending
};

// Validates g, enumerates the 2^k codewords and derives a parity-check matrix
// for the original (unpermuted) coordinate order.
// Throws RankDeficientError, NotProperSubspaceError (k = n), TooLargeError.
LinearCode build_code(const BinaryMatrix& g);

// S(y) = H y^T as a word of length n-k.
BitWord syndrome(const LinearCode& code, const BitWord& y);

// Smallest weight among the non-zero codewords.
int minimum_distance(const LinearCode& code);

// counts[w] = number of codewords of weight w, 0 <= w <= n.
std::vector<std::uint64_t> weight_enumerator(const LinearCode& code);

}  // namespace cosetposet
