#include "cosetposet/hasse.hpp"

#include <algorithm>

namespace cosetposet {

Graph Graph::from_edges(int vertex_count, std::vector<std::pair<int, int>> edges) {
  for (auto& [u, v] : edges) {
    if (u == v || u < 0 || v < 0 || u >= vertex_count || v >= vertex_count) {
      throw Error("Graph::from_edges: invalid edge");
    }
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(vertex_count));
  for (const auto& [u, v] : edges) {
    adjacency[static_cast<std::size_t>(u)].push_back(v);
    adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nbrs : adjacency) std::sort(nbrs.begin(), nbrs.end());
  return Graph{vertex_count, std::move(edges), std::move(adjacency)};
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adjacency[static_cast<std::size_t>(u)];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

HasseGraph HasseGraph::from_edges(CosetTable table, std::vector<std::pair<int, int>> edges) {
  Graph g = Graph::from_edges(table.vertex_count(), std::move(edges));
  return HasseGraph{std::move(table), std::move(g)};
}

bool precedes(const Coset& a, const Coset& b) {
  if (a.syndrome.length() != b.syndrome.length() ||
      a.representative().length() != b.representative().length()) {
    throw TableMismatchError("precedes: cosets come from different tables");
  }
  for (const BitWord& xa : a.leaders) {
    for (const BitWord& xb : b.leaders) {
      if (support_subset(xa, xb)) return true;
    }
  }
  return false;
}

bool strictly_precedes(const Coset& a, const Coset& b) {
  return !(a.syndrome == b.syndrome) && precedes(a, b);
}

HasseGraph build_hasse(CosetTable table) {
  const int v = table.vertex_count();
  const int n = table.code.n;
  std::vector<std::vector<std::pair<int, int>>> local(static_cast<std::size_t>(v));

#pragma omp parallel for schedule(dynamic)
  for (int b = 0; b < v; ++b) {
    const Coset& heavy = table.cosets[static_cast<std::size_t>(b)];
    if (heavy.weight == 0) continue;
    auto& out = local[static_cast<std::size_t>(b)];
    for (const BitWord& leader : heavy.leaders) {
      for (int i = 1; i <= n; ++i) {
        if (!leader.has_coordinate(i)) continue;
        const BitWord stripped = leader ^ BitWord::unit(n, i);
        const int a = table.index_of(syndrome(table.code, stripped));
        if (table.cosets[static_cast<std::size_t>(a)].weight == heavy.weight - 1) {
          out.emplace_back(a, b);
        }
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
  }

  std::vector<std::pair<int, int>> edges;
  for (const auto& chunk : local) edges.insert(edges.end(), chunk.begin(), chunk.end());
  return HasseGraph::from_edges(std::move(table), std::move(edges));
}

std::vector<int> orphans(const HasseGraph& g) {
  std::vector<int> out;
  for (int u = 0; u < g.table.vertex_count(); ++u) {
    const int w = g.table.cosets[static_cast<std::size_t>(u)].weight;
    bool has_parent = false;
    for (int nbr : g.graph.adjacency[static_cast<std::size_t>(u)]) {
      if (g.table.cosets[static_cast<std::size_t>(nbr)].weight == w + 1) {
        has_parent = true;
        break;
      }
    }
    if (!has_parent) out.push_back(u);
  }
  return out;
}

namespace {

// First (ascending) leader pair with supp(x_lo) contained in supp(x_hi).
std::pair<BitWord, BitWord> witness_pair(const Coset& lo, const Coset& hi) {
  for (const BitWord& xl : lo.leaders) {
    for (const BitWord& xh : hi.leaders) {
      if (support_subset(xl, xh)) return {xl, xh};
    }
  }
  throw Error("witness_pair: no support-contained leader pair");
}

// Strip supp(hi) \ supp(lo) from hi one coordinate at a time, smallest
// coordinate first; records the coset index after each step.
std::vector<int> strip_path(const CosetTable& table, const BitWord& lo, const BitWord& hi) {
  std::vector<int> path;
  BitWord cur = hi;
  for (int i = 1; i <= cur.length(); ++i) {
    if (cur.has_coordinate(i) && !lo.has_coordinate(i)) {
      cur = cur ^ BitWord::unit(cur.length(), i);
      path.push_back(table.index_of(syndrome(table.code, cur)));
    }
  }
  return path;
}

}  // namespace

PosetDistance poset_distance(const CosetTable& table, int a, int b) {
  const int v = table.vertex_count();
  if (a < 0 || b < 0 || a >= v || b >= v) {
    throw TableMismatchError("poset_distance: vertex index out of range");
  }
  if (a == b) throw Error("poset_distance: cosets must be distinct");

  // Work with the lighter coset first; mirror the path at the end if needed.
  const bool swapped = table.cosets[static_cast<std::size_t>(a)].weight >
                       table.cosets[static_cast<std::size_t>(b)].weight;
  const int lo_idx = swapped ? b : a;
  const int hi_idx = swapped ? a : b;
  const Coset& lo = table.cosets[static_cast<std::size_t>(lo_idx)];
  const Coset& hi = table.cosets[static_cast<std::size_t>(hi_idx)];

  PosetDistance result;
  if (strictly_precedes(lo, hi)) {
    const auto [xl, xh] = witness_pair(lo, hi);
    result.value = hi.weight - lo.weight;
    result.path.push_back(hi_idx);
    for (int u : strip_path(table, xl, xh)) result.path.push_back(u);
    std::reverse(result.path.begin(), result.path.end());  // now lo ... hi
  } else {
    // Maximum-weight common strict descendant; table order breaks ties and
    // the zero coset guarantees at least one candidate.
    int mid_idx = -1;
    for (int c = 0; c < v; ++c) {
      const Coset& cand = table.cosets[static_cast<std::size_t>(c)];
      if (cand.weight >= lo.weight) break;
      if (strictly_precedes(cand, lo) && strictly_precedes(cand, hi)) {
        if (mid_idx < 0 ||
            cand.weight > table.cosets[static_cast<std::size_t>(mid_idx)].weight) {
          mid_idx = c;
        }
      }
    }
    if (mid_idx < 0) throw Error("poset_distance: no common descendant found");
    const Coset& mid = table.cosets[static_cast<std::size_t>(mid_idx)];
    result.value = lo.weight + hi.weight - 2 * mid.weight;

    const auto [ml, xl] = witness_pair(mid, lo);
    const auto [mh, xh] = witness_pair(mid, hi);
    std::vector<int> down = strip_path(table, ml, xl);  // lo-side, ends at mid
    std::vector<int> up = strip_path(table, mh, xh);    // hi-side, ends at mid
    result.path.push_back(lo_idx);
    result.path.insert(result.path.end(), down.begin(), down.end());
    result.path.insert(result.path.end(), up.rbegin() + 1, up.rend());
    result.path.push_back(hi_idx);
  }

  if (swapped) std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace cosetposet
