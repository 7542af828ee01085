#pragma once

#include <string>

#include "mar/families/multigraph.hpp"
#include "mar/matroid.hpp"

namespace mar {

/// Bond matroid of a connected multigraph: a set of edges is independent
/// when removing it keeps the graph connected.
/// rank(S) = |S| - (number of components of (V, E \ S)) + 1.
inline Matroid cographic_matroid(const Multigraph& g) {
  g.validate();
  if (!is_connected(g))
    throw FamilyError("cographic matroid requires a connected graph");
  int n = static_cast<int>(g.edges.size());
  std::string tag = "cographic(V=" + std::to_string(g.num_vertices) +
                    ",E=" + std::to_string(n) + ")";
  auto oracle = [g](const Subset& s) {
    return count_components(g, ~s) == 1;
  };
  return Matroid(n, tag, oracle);
}

}  // namespace mar
