#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cosetposet/gf2_matrix.hpp"

namespace cosetposet {

// Number of k-dimensional subspaces of F_2^n (Gaussian binomial).
std::uint64_t count_subspaces(int n, int k);

// One generator matrix per [n,k] code: every full-rank RREF, so each
// subspace appears exactly once.  Deterministic order.
std::vector<BinaryMatrix> exhaustive_generators(int n, int k);

// Random full-rank k x n generator.
BinaryMatrix random_generator(int n, int k, std::mt19937_64& rng);

}  // namespace cosetposet
