#pragma once

#include <string>

#include "mar/families/multigraph.hpp"
#include "mar/matroid.hpp"

namespace mar {

/// Bicircular matroid of a connected multigraph that contains a cycle: a set
/// of edges is independent when every component of (V, S) has at most one
/// cycle. rank(S) = |V| - (number of tree components of (V, S)); the
/// preconditions make the full ground set span rank |V|.
inline Matroid bicircular_matroid(const Multigraph& g) {
  g.validate();
  if (!is_connected(g))
    throw FamilyError("bicircular matroid requires a connected graph");
  if (g.edges.size() < static_cast<std::size_t>(g.num_vertices))
    throw FamilyError("bicircular matroid requires at least one cycle");
  int n = static_cast<int>(g.edges.size());
  std::string tag = "bicircular(V=" + std::to_string(g.num_vertices) +
                    ",E=" + std::to_string(n) + ")";
  auto oracle = [g](const Subset& s) {
    detail::UnionFind uf(g.num_vertices);
    std::vector<bool> cyclic(g.num_vertices, false);
    for (ElementId e : s) {
      int a = uf.find(g.edges[e].first);
      int b = uf.find(g.edges[e].second);
      if (a == b) {
        if (cyclic[a]) return false;
        cyclic[a] = true;
      } else {
        if (cyclic[a] && cyclic[b]) return false;
        uf.parent[b] = a;
        cyclic[a] = cyclic[a] || cyclic[b];
      }
    }
    return true;
  };
  return Matroid(n, tag, oracle);
}

}  // namespace mar
