#pragma once

#include <utility>
#include <vector>

#include "cosetposet/coset_table.hpp"

namespace cosetposet {

// Undirected simple graph with a deduplicated, sorted edge list.
struct Graph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;    // (u, v) with u < v, sorted
  std::vector<std::vector<int>> adjacency;   // sorted neighbor lists

  static Graph from_edges(int vertex_count, std::vector<std::pair<int, int>> edges);
  bool has_edge(int u, int v) const;
};

// The Hasse diagram of the coset order: one vertex per coset, an edge for
// every covering pair (weights w and w+1, lighter strictly preceding).
struct HasseGraph {
  CosetTable table;
  Graph graph;

  // Assemble from an explicit edge list (diagnostics and negative controls).
  static HasseGraph from_edges(CosetTable table, std::vector<std::pair<int, int>> edges);
};

// a <= b in the coset order: some leader of a is support-contained in some
// leader of b.  Reflexive.  Throws TableMismatchError on incompatible cosets.
bool precedes(const Coset& a, const Coset& b);

// precedes and distinct cosets.
bool strictly_precedes(const Coset& a, const Coset& b);

// Edge-building kernel: for each coset of weight w and each leader x, every
// singly-stripped word x + e_i that lands in a weight-(w-1) coset yields an
// edge.  Equivalent to the pairwise leader-support definition (see
// ref::hasse_edges), parallel over cosets with an ordered merge.
HasseGraph build_hasse(CosetTable table);

// Vertices with no parent: no edge to a heavier coset.
std::vector<int> orphans(const HasseGraph& g);

// Graph distance computed from the order structure, with an explicit path.
struct PosetDistance {
  int value = 0;
  std::vector<int> path;  // vertex indices from a to b, consecutive pairs adjacent
};

// If one coset strictly precedes the other, the distance is the weight gap
// realized by stripping support coordinates one at a time (smallest
// coordinate first).  Otherwise routes through a maximum-weight common
// strict descendant (ties broken by table order); the zero coset keeps that
// set nonempty.  Requires a != b.
PosetDistance poset_distance(const CosetTable& table, int a, int b);

}  // namespace cosetposet
