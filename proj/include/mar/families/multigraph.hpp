#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mar/errors.hpp"
#include "mar/subset.hpp"

namespace mar {

/// A loopless multigraph. Edges are indexed by position; parallel edges are
/// allowed, self-loops are not.
struct Multigraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  /// The complete graph K_n with edges in lexicographic pair order.
  static Multigraph complete(int n) {
    Multigraph g;
    g.num_vertices = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.edges.emplace_back(u, v);
    return g;
  }

  void validate() const {
    if (num_vertices < 1) throw FamilyError("graph needs at least one vertex");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      auto [u, v] = edges[i];
      if (u < 0 || u >= num_vertices || v < 0 || v >= num_vertices)
        throw FamilyError("edge " + std::to_string(i) +
                          " has a vertex outside 0.." +
                          std::to_string(num_vertices - 1));
      if (u == v)
        throw FamilyError("edge " + std::to_string(i) + " is a self-loop");
    }
    if (edges.size() > static_cast<std::size_t>(kMaxGroundSize))
      throw FamilyError("graph has " + std::to_string(edges.size()) +
                        " edges, more than the supported " +
                        std::to_string(kMaxGroundSize));
  }
};

namespace detail {

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  /// Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
  std::vector<int> parent;
};

}  // namespace detail

/// Number of connected components of the spanning subgraph (V, edge_set);
/// isolated vertices count.
inline int count_components(const Multigraph& g, const Subset& edge_set) {
  detail::UnionFind uf(g.num_vertices);
  int comps = g.num_vertices;
  for (ElementId e : edge_set)
    if (uf.unite(g.edges[e].first, g.edges[e].second)) --comps;
  return comps;
}

inline bool is_connected(const Multigraph& g) {
  return count_components(g, Subset::full(static_cast<int>(g.edges.size()))) == 1;
}

/// Number of components of (V, edge_set) that are trees (no cycle).
inline int count_tree_components(const Multigraph& g, const Subset& edge_set) {
  detail::UnionFind uf(g.num_vertices);
  std::vector<bool> cyclic(g.num_vertices, false);
  for (ElementId e : edge_set) {
    int a = uf.find(g.edges[e].first);
    int b = uf.find(g.edges[e].second);
    if (a == b) {
      cyclic[a] = true;
    } else {
      uf.parent[b] = a;
      cyclic[a] = cyclic[a] || cyclic[b];
    }
  }
  int trees = 0;
  for (int v = 0; v < g.num_vertices; ++v)
    if (uf.find(v) == v && !cyclic[v]) ++trees;
  return trees;
}

/// A multigraph with +1/-1 edge signs.
struct SignedMultigraph {
  Multigraph graph;
  std::vector<int> signs;

  /// K_n with both a positive and a negative copy of every edge; the
  /// positive copy comes first within each pair.
  static SignedMultigraph complete_doubled(int n) {
    SignedMultigraph sg;
    sg.graph.num_vertices = n;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        sg.graph.edges.emplace_back(u, v);
        sg.signs.push_back(+1);
        sg.graph.edges.emplace_back(u, v);
        sg.signs.push_back(-1);
      }
    return sg;
  }

  void validate() const {
    graph.validate();
    if (signs.size() != graph.edges.size())
      throw FamilyError("sign list does not match the edge list");
    for (std::size_t i = 0; i < signs.size(); ++i)
      if (signs[i] != 1 && signs[i] != -1)
        throw FamilyError("edge " + std::to_string(i) +
                          " has sign " + std::to_string(signs[i]) +
                          ", expected +1 or -1");
  }
};

}  // namespace mar
