#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cosetposet/hasse.hpp"

namespace cosetposet {

// BFS distances from src; unreachable vertices get -1.
std::vector<int> bfs_distances(const Graph& g, int src);

bool is_connected(const Graph& g);

// Greatest distance between any two vertices; all-pairs BFS, parallel over
// sources.  Throws DisconnectedError.
int diameter(const Graph& g);

// BFS 2-coloring; std::nullopt when an odd cycle exists.  Color of the
// smallest vertex in each component is 0.
std::optional<std::vector<int>> two_color(const Graph& g);

bool is_proper_two_coloring(const Graph& g, const std::vector<int>& color);

struct Bipartition {
  std::vector<int> odd;
  std::vector<int> even;
};

// Splits vertices by coset-weight parity.
Bipartition bipartition(const HasseGraph& g);

// No edge has a common neighbor; neighbor-list intersection per edge.
bool is_triangle_free(const Graph& g);

// True iff the graph is the star K_{1,m} with the zero coset as center.
bool is_star(const HasseGraph& g);

struct IsoWitness {
  std::vector<int> mapping;  // vertex of g1 -> vertex of g2
};

// Color-refinement (adjacency only) plus backtracking; a returned witness is
// re-verified pair-by-pair before it leaves this function.
std::optional<IsoWitness> graph_isomorphic(const Graph& g1, const Graph& g2);

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping);

// Deterministic DOT text: nodes in table order, one rank per weight level,
// zero coset red, orphans blue.
std::string to_dot(const HasseGraph& g);

struct GraphReport {
  bool connected = false;
  int diameter = -1;  // -1 when disconnected
  int odd_count = 0;
  int even_count = 0;
  bool parity_coloring_proper = false;
  bool triangle_free = false;
  bool star = false;
  int orphan_count = 0;
  int covering_radius = 0;
  int chromatic_number = 1;  // 2 when edges exist (bipartite)
};

GraphReport analyze_graph(const HasseGraph& g);

}  // namespace cosetposet
