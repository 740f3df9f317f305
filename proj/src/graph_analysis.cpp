#include "cosetposet/graph_analysis.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

namespace cosetposet {

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count), -1);
  std::queue<int> frontier;
  dist[static_cast<std::size_t>(src)] = 0;
  frontier.push(src);
  while (!frontier.empty()) {
    const int u = frontier.front();
    frontier.pop();
    for (int nbr : g.adjacency[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(nbr)] < 0) {
        dist[static_cast<std::size_t>(nbr)] = dist[static_cast<std::size_t>(u)] + 1;
        frontier.push(nbr);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count == 0) return true;
  const std::vector<int> dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedError("diameter: graph is disconnected");
  int best = 0;
#pragma omp parallel for reduction(max : best) schedule(dynamic)
  for (int src = 0; src < g.vertex_count; ++src) {
    const std::vector<int> dist = bfs_distances(g, src);
    const int ecc = *std::max_element(dist.begin(), dist.end());
    if (ecc > best) best = ecc;
  }
  return best;
}

std::optional<std::vector<int>> two_color(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.vertex_count), -1);
  for (int start = 0; start < g.vertex_count; ++start) {
    if (color[static_cast<std::size_t>(start)] >= 0) continue;
    color[static_cast<std::size_t>(start)] = 0;
    std::queue<int> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      const int u = frontier.front();
      frontier.pop();
      for (int nbr : g.adjacency[static_cast<std::size_t>(u)]) {
        if (color[static_cast<std::size_t>(nbr)] < 0) {
          color[static_cast<std::size_t>(nbr)] = 1 - color[static_cast<std::size_t>(u)];
          frontier.push(nbr);
        } else if (color[static_cast<std::size_t>(nbr)] ==
                   color[static_cast<std::size_t>(u)]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_proper_two_coloring(const Graph& g, const std::vector<int>& color) {
  for (const auto& [u, v] : g.edges) {
    if (color[static_cast<std::size_t>(u)] == color[static_cast<std::size_t>(v)]) return false;
  }
  return true;
}

Bipartition bipartition(const HasseGraph& g) {
  Bipartition split;
  for (int u = 0; u < g.table.vertex_count(); ++u) {
    if (g.table.cosets[static_cast<std::size_t>(u)].weight % 2 == 1) {
      split.odd.push_back(u);
    } else {
      split.even.push_back(u);
    }
  }
  return split;
}

bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges) {
    const auto& a = g.adjacency[static_cast<std::size_t>(u)];
    const auto& b = g.adjacency[static_cast<std::size_t>(v)];
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] == b[j]) return false;
      if (a[i] < b[j]) {
        ++i;
      } else {
        ++j;
      }
    }
  }
  return true;
}

bool is_star(const HasseGraph& g) {
  const int v = g.graph.vertex_count;
  if (static_cast<int>(g.graph.edges.size()) != v - 1) return false;
  // Table order puts the zero coset first.
  if (g.table.cosets.front().weight != 0) return false;
  if (static_cast<int>(g.graph.adjacency[0].size()) != v - 1) return false;
  for (int u = 1; u < v; ++u) {
    if (g.graph.adjacency[static_cast<std::size_t>(u)].size() != 1) return false;
  }
  return true;
}

namespace {

// Joint color refinement: recolor vertices of both graphs by (color, sorted
// neighbor colors) until stable, sharing one signature table so colors are
// comparable across graphs.  Returns false when the color histograms differ.
bool refine_colors(const Graph& g1, const Graph& g2, std::vector<int>& c1,
                   std::vector<int>& c2) {
  c1.assign(static_cast<std::size_t>(g1.vertex_count), 0);
  c2.assign(static_cast<std::size_t>(g2.vertex_count), 0);
  int classes = 1;
  for (int round = 0; round < g1.vertex_count + 1; ++round) {
    using Signature = std::pair<int, std::vector<int>>;
    std::map<Signature, int> ids;
    auto signatures = [&](const Graph& g, const std::vector<int>& c) {
      std::vector<Signature> sig(static_cast<std::size_t>(g.vertex_count));
      for (int u = 0; u < g.vertex_count; ++u) {
        std::vector<int> nbr;
        nbr.reserve(g.adjacency[static_cast<std::size_t>(u)].size());
        for (int w : g.adjacency[static_cast<std::size_t>(u)]) {
          nbr.push_back(c[static_cast<std::size_t>(w)]);
        }
        std::sort(nbr.begin(), nbr.end());
        sig[static_cast<std::size_t>(u)] = {c[static_cast<std::size_t>(u)], std::move(nbr)};
      }
      return sig;
    };
    const auto s1 = signatures(g1, c1);
    const auto s2 = signatures(g2, c2);
    for (const auto& s : s1) ids.emplace(s, 0);
    for (const auto& s : s2) ids.emplace(s, 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;

    std::vector<int> h1(static_cast<std::size_t>(next), 0);
    std::vector<int> h2(static_cast<std::size_t>(next), 0);
    for (int u = 0; u < g1.vertex_count; ++u) {
      c1[static_cast<std::size_t>(u)] = ids[s1[static_cast<std::size_t>(u)]];
      ++h1[static_cast<std::size_t>(c1[static_cast<std::size_t>(u)])];
    }
    for (int u = 0; u < g2.vertex_count; ++u) {
      c2[static_cast<std::size_t>(u)] = ids[s2[static_cast<std::size_t>(u)]];
      ++h2[static_cast<std::size_t>(c2[static_cast<std::size_t>(u)])];
    }
    if (h1 != h2) return false;
    if (next == classes) break;  // stable
    classes = next;
  }
  return true;
}

struct IsoSearch {
  const Graph& g1;
  const Graph& g2;
  const std::vector<int>& c1;
  const std::vector<int>& c2;
  std::vector<int> order;    // g1 vertices, most-constrained color class first
  std::vector<int> mapping;  // g1 -> g2, -1 unassigned
  std::vector<bool> used;    // g2 vertices already taken

  bool assign(std::size_t depth) {
    if (depth == order.size()) return true;
    const int u = order[depth];
    for (int v = 0; v < g2.vertex_count; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      if (c2[static_cast<std::size_t>(v)] != c1[static_cast<std::size_t>(u)]) continue;
      bool ok = true;
      for (std::size_t d = 0; d < depth; ++d) {
        const int w = order[d];
        if (g1.has_edge(u, w) != g2.has_edge(v, mapping[static_cast<std::size_t>(w)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      mapping[static_cast<std::size_t>(u)] = v;
      used[static_cast<std::size_t>(v)] = true;
      if (assign(depth + 1)) return true;
      mapping[static_cast<std::size_t>(u)] = -1;
      used[static_cast<std::size_t>(v)] = false;
    }
    return false;
  }
};

}  // namespace

bool is_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& mapping) {
  if (g1.vertex_count != g2.vertex_count) return false;
  if (static_cast<int>(mapping.size()) != g1.vertex_count) return false;
  std::vector<bool> hit(static_cast<std::size_t>(g2.vertex_count), false);
  for (int m : mapping) {
    if (m < 0 || m >= g2.vertex_count || hit[static_cast<std::size_t>(m)]) return false;
    hit[static_cast<std::size_t>(m)] = true;
  }
  for (int u = 0; u < g1.vertex_count; ++u) {
    for (int v = u + 1; v < g1.vertex_count; ++v) {
      if (g1.has_edge(u, v) != g2.has_edge(mapping[static_cast<std::size_t>(u)],
                                           mapping[static_cast<std::size_t>(v)])) {
        return false;
      }
    }
  }
  return true;
}

std::optional<IsoWitness> graph_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.vertex_count != g2.vertex_count) return std::nullopt;
  if (g1.edges.size() != g2.edges.size()) return std::nullopt;
  if (g1.vertex_count == 0) return IsoWitness{{}};

  std::vector<int> c1, c2;
  if (!refine_colors(g1, g2, c1, c2)) return std::nullopt;

  std::vector<int> class_size(
      static_cast<std::size_t>(*std::max_element(c1.begin(), c1.end()) + 1), 0);
  for (int c : c1) ++class_size[static_cast<std::size_t>(c)];
  std::vector<int> order(static_cast<std::size_t>(g1.vertex_count));
  for (int u = 0; u < g1.vertex_count; ++u) order[static_cast<std::size_t>(u)] = u;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const int sa = class_size[static_cast<std::size_t>(c1[static_cast<std::size_t>(a)])];
    const int sb = class_size[static_cast<std::size_t>(c1[static_cast<std::size_t>(b)])];
    if (sa != sb) return sa < sb;
    if (c1[static_cast<std::size_t>(a)] != c1[static_cast<std::size_t>(b)]) {
      return c1[static_cast<std::size_t>(a)] < c1[static_cast<std::size_t>(b)];
    }
    return a < b;
  });

  IsoSearch search{g1, g2, c1, c2, std::move(order),
                   std::vector<int>(static_cast<std::size_t>(g1.vertex_count), -1),
                   std::vector<bool>(static_cast<std::size_t>(g2.vertex_count), false)};
  if (!search.assign(0)) return std::nullopt;
  if (!is_isomorphism(g1, g2, search.mapping)) {
    throw Error("graph_isomorphic: search produced an invalid mapping");
  }
  return IsoWitness{std::move(search.mapping)};
}

std::string to_dot(const HasseGraph& g) {
  const std::vector<int> orphan_list = orphans(g);
  std::vector<bool> is_orphan(static_cast<std::size_t>(g.table.vertex_count()), false);
  for (int u : orphan_list) is_orphan[static_cast<std::size_t>(u)] = true;

  std::ostringstream os;
  os << "graph hasse {\n";
  os << "  rankdir=BT;\n";
  os << "  node [shape=circle fontsize=10];\n";
  for (int u = 0; u < g.table.vertex_count(); ++u) {
    const Coset& coset = g.table.cosets[static_cast<std::size_t>(u)];
    os << "  c" << u << " [label=\"C" << u << "\\nw=" << coset.weight << "\"";
    if (coset.weight == 0) {
      os << " style=filled fillcolor=red";
    } else if (is_orphan[static_cast<std::size_t>(u)]) {
      os << " style=filled fillcolor=blue";
    }
    os << "];\n";
  }
  const int rho = covering_radius(g.table);
  for (int w = 0; w <= rho; ++w) {
    os << "  { rank=same;";
    for (int u = 0; u < g.table.vertex_count(); ++u) {
      if (g.table.cosets[static_cast<std::size_t>(u)].weight == w) os << " c" << u << ";";
    }
    os << " }\n";
  }
  for (const auto& [u, v] : g.graph.edges) {
    os << "  c" << u << " -- c" << v << ";\n";
  }
  os << "}\n";
  return os.str();
}

GraphReport analyze_graph(const HasseGraph& g) {
  GraphReport report;
  report.connected = is_connected(g.graph);
  report.diameter = report.connected ? diameter(g.graph) : -1;
  const Bipartition split = bipartition(g);
  report.odd_count = static_cast<int>(split.odd.size());
  report.even_count = static_cast<int>(split.even.size());
  std::vector<int> parity(static_cast<std::size_t>(g.table.vertex_count()), 0);
  for (int u : split.odd) parity[static_cast<std::size_t>(u)] = 1;
  report.parity_coloring_proper = is_proper_two_coloring(g.graph, parity);
  report.triangle_free = is_triangle_free(g.graph);
  report.star = is_star(g);
  report.orphan_count = static_cast<int>(orphans(g).size());
  report.covering_radius = covering_radius(g.table);
  report.chromatic_number = g.graph.edges.empty() ? 1 : 2;
  return report;
}

}  // namespace cosetposet
