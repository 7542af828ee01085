#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mar/families/multigraph.hpp"
#include "mar/matroid.hpp"

namespace mar {

namespace detail {

/// Union-find whose edges carry parities: par[x] is the parity of the path
/// from x to its parent, with negative edges contributing 1. find() applies
/// path compression and keeps the parities consistent.
struct ParityUnionFind {
  explicit ParityUnionFind(int n) : parent(n), par(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }

  /// Root of x; parity_out becomes the parity of the x-to-root path.
  int find(int x, std::uint8_t& parity_out) {
    int root = x;
    std::uint8_t acc = 0;
    while (parent[root] != root) {
      acc ^= par[root];
      root = parent[root];
    }
    parity_out = acc;
    std::uint8_t rest = acc;
    while (parent[x] != root && parent[x] != x) {
      int next = parent[x];
      std::uint8_t step = par[x];
      parent[x] = root;
      par[x] = rest;
      rest ^= step;
      x = next;
    }
    return root;
  }

  std::vector<int> parent;
  std::vector<std::uint8_t> par;
};

}  // namespace detail

/// Number of balanced components of (V, edge_set): components in which every
/// cycle is positive. Isolated vertices are balanced.
inline int count_balanced_components(const SignedMultigraph& sg,
                                     const Subset& edge_set) {
  int nv = sg.graph.num_vertices;
  detail::ParityUnionFind uf(nv);
  std::vector<bool> unbalanced(nv, false);
  for (ElementId e : edge_set) {
    std::uint8_t pu = 0, pv = 0;
    int ru = uf.find(sg.graph.edges[e].first, pu);
    int rv = uf.find(sg.graph.edges[e].second, pv);
    std::uint8_t s = sg.signs[e] < 0 ? 1 : 0;
    if (ru == rv) {
      if (pu ^ pv ^ s) unbalanced[ru] = true;
    } else {
      uf.parent[rv] = ru;
      uf.par[rv] = pu ^ pv ^ s;
      unbalanced[ru] = unbalanced[ru] || unbalanced[rv];
    }
  }
  int balanced = 0;
  for (int v = 0; v < nv; ++v) {
    std::uint8_t p = 0;
    if (uf.find(v, p) == v && !unbalanced[v]) ++balanced;
  }
  return balanced;
}

/// Signed-graphic (even-cycle style) matroid of a connected unbalanced
/// signed multigraph: a set of edges is independent when every component of
/// (V, S) is a tree or contains exactly one cycle, and that cycle is
/// negative. rank(S) = |V| - (number of balanced components of (V, S)).
inline Matroid signed_matroid(const SignedMultigraph& sg) {
  sg.validate();
  if (!is_connected(sg.graph))
    throw FamilyError("signed matroid requires a connected graph");
  int n = static_cast<int>(sg.graph.edges.size());
  if (count_balanced_components(sg, Subset::full(n)) != 0)
    throw FamilyError("signed matroid requires at least one negative cycle");
  std::string tag = "signed(V=" + std::to_string(sg.graph.num_vertices) +
                    ",E=" + std::to_string(n) + ")";
  auto oracle = [sg](const Subset& s) {
    int nv = sg.graph.num_vertices;
    detail::ParityUnionFind uf(nv);
    std::vector<bool> has_cycle(nv, false);
    for (ElementId e : s) {
      std::uint8_t pu = 0, pv = 0;
      int ru = uf.find(sg.graph.edges[e].first, pu);
      int rv = uf.find(sg.graph.edges[e].second, pv);
      std::uint8_t sign = sg.signs[e] < 0 ? 1 : 0;
      if (ru == rv) {
        if (!(pu ^ pv ^ sign)) return false;
        if (has_cycle[ru]) return false;
        has_cycle[ru] = true;
      } else {
        if (has_cycle[ru] && has_cycle[rv]) return false;
        uf.parent[rv] = ru;
        uf.par[rv] = pu ^ pv ^ sign;
        has_cycle[ru] = has_cycle[ru] || has_cycle[rv];
      }
    }
    return true;
  };
  return Matroid(n, tag, oracle);
}

}  // namespace mar
