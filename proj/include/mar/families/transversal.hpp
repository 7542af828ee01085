#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mar/matroid.hpp"
#include "mar/subset.hpp"

namespace mar {

/// A finite set system A_0,...,A_{m-1} over the ground set 0..n-1 whose
/// union covers the whole ground set.
struct SetFamily {
  int universe_size = 0;
  std::vector<Subset> sets;

  void validate() const {
    if (universe_size < 0 || universe_size > kMaxGroundSize)
      throw FamilyError("set family universe size out of range");
    Subset covered(universe_size);
    for (std::size_t j = 0; j < sets.size(); ++j) {
      if (sets[j].universe() != universe_size)
        throw FamilyError("set " + std::to_string(j) +
                          " lives in a different universe");
      covered |= sets[j];
    }
    if (covered != Subset::full(universe_size))
      throw FamilyError("set family does not cover the ground set");
  }
};

/// Transversal matroid of a set family: S is independent when the bipartite
/// graph between S and the sets has a matching saturating S (each element of
/// S assigned to a distinct set containing it).
inline Matroid transversal_matroid(const SetFamily& fam) {
  fam.validate();
  int n = fam.universe_size;
  std::vector<std::uint64_t> set_masks;
  set_masks.reserve(fam.sets.size());
  for (const Subset& a : fam.sets) set_masks.push_back(a.mask());
  std::string tag = "transversal(n=" + std::to_string(n) + ",sets=" +
                    std::to_string(fam.sets.size()) + ")";
  auto oracle = [set_masks](const Subset& s) {
    int m = static_cast<int>(set_masks.size());
    if (s.size() > m) return false;
    std::vector<int> match(m, -1);
    std::vector<bool> visited(m);
    auto augment = [&](auto&& self, ElementId e) -> bool {
      for (int j = 0; j < m; ++j) {
        if (visited[j] || !((set_masks[j] >> e) & 1u)) continue;
        visited[j] = true;
        if (match[j] < 0 || self(self, match[j])) {
          match[j] = e;
          return true;
        }
      }
      return false;
    };
    for (ElementId e : s) {
      visited.assign(m, false);
      if (!augment(augment, e)) return false;
    }
    return true;
  };
  return Matroid(n, tag, oracle);
}

}  // namespace mar
