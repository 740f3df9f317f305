#pragma once

#include <cstdint>
#include <vector>

#include "cosetposet/bitword.hpp"
#include "cosetposet/linear_code.hpp"

namespace cosetposet {

// One coset of the code: its syndrome, weight, and the complete set of
// minimum-weight members.
struct Coset {
  BitWord syndrome;              // length n-k
  int weight = 0;                // weight of every leader
  std::vector<BitWord> leaders;  // all minimum-weight members, ascending

  const BitWord& representative() const { return leaders.front(); }
};

// All 2^(n-k) cosets of a code, sorted by (weight, representative).
struct CosetTable {
  LinearCode code;
  std::vector<Coset> cosets;
  std::vector<std::int32_t> index_by_syndrome;  // syndrome bits -> coset index

  int vertex_count() const { return static_cast<int>(cosets.size()); }
  int index_of(const BitWord& syn) const {
    return index_by_syndrome[syn.bits()];
  }
  const Coset& coset_of(const BitWord& word) const;
};

// Weight-ordered enumeration: scans weight levels w = 0, 1, ... through all
// binomial(n, w) masks, sealing each syndrome bucket at the first weight that
// hits it; every mask of that weight landing in the bucket is a leader.
// Stops once every bucket is sealed.  Parallelized over fixed mask chunks per
// weight level with an ordered merge, so the output is identical no matter
// how many threads run.
CosetTable enumerate_cosets(const LinearCode& code);

// Largest coset weight.
int covering_radius(const CosetTable& table);

// max over all words of the distance to the nearest codeword, by direct scan
// of all 2^n words (OpenMP reduction).  Independent of the coset table path.
int covering_radius_bruteforce(const LinearCode& code);

}  // namespace cosetposet
