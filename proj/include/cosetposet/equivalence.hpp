#pragma once

#include <optional>

#include "cosetposet/linear_code.hpp"
#include "cosetposet/permutation.hpp"

namespace cosetposet {

// Search is exponential in n; invariant-based rejections stay available
// above this bound.
inline constexpr int kMaxEquivalenceLength = 12;

// The code {P(u) : u in C}; same dimension and weight enumerator.
LinearCode apply_permutation(const LinearCode& code, const Permutation& p);

// Decides permutation equivalence.  Returns a verified pi with P(C) = D, or
// std::nullopt.  Rejects immediately on mismatched n, k, or weight
// enumerators; otherwise backtracks over coordinate assignments with
// column-signature and pair-count pruning.  Throws TooLargeError when the
// search itself would be needed for n > 12.
std::optional<Permutation> permutation_equivalent(const LinearCode& c, const LinearCode& d);

}  // namespace cosetposet
