#pragma once

#include <string>

#include "mar/families/multigraph.hpp"
#include "mar/matroid.hpp"

namespace mar {

/// Cycle matroid of a multigraph: a set of edges is independent when it is a
/// forest. rank(S) = |V| - (number of components of (V, S)).
inline Matroid graphic_matroid(const Multigraph& g) {
  g.validate();
  int n = static_cast<int>(g.edges.size());
  std::string tag = "graphic(V=" + std::to_string(g.num_vertices) +
                    ",E=" + std::to_string(n) + ")";
  auto oracle = [g](const Subset& s) {
    detail::UnionFind uf(g.num_vertices);
    for (ElementId e : s)
      if (!uf.unite(g.edges[e].first, g.edges[e].second)) return false;
    return true;
  };
  return Matroid(n, tag, oracle);
}

}  // namespace mar
