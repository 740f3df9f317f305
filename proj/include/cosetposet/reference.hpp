#pragma once

#include <utility>
#include <vector>

#include "cosetposet/coset_table.hpp"
#include "cosetposet/hasse.hpp"

namespace cosetposet::ref {

// Serial reference implementations.  Each one takes a deliberately different
// route from the parallel kernel it mirrors, so the pair double as oracles
// for one another in the tests and as the baseline in the benchmark.

// Two full passes over all 2^n words: minimum weight per syndrome bucket,
// then leader collection in ascending word order.
CosetTable enumerate_cosets(const LinearCode& code);

// Plain double loop over words and codewords.
int covering_radius_bruteforce(const LinearCode& code);

// The covering relation straight from its definition: every coset pair with
// weights (w, w+1) is tested for a support-contained leader pair.
std::vector<std::pair<int, int>> hasse_edges(const CosetTable& table);

// One BFS per source, serial.
int diameter(const Graph& g);

}  // namespace cosetposet::ref
