#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "mar/matroid.hpp"
#include "mar/subset.hpp"

namespace mar {

/// A matroid given by the full list of its bases.
struct ExplicitBases {
  int ground_size = 0;
  std::vector<Subset> bases;
};

/// Builds the matroid whose bases are exactly the given sets. Construction
/// validates the basis axioms: the list is nonempty, all bases have the same
/// size, and the exchange property holds (for bases B1, B2 and x in B1 \ B2
/// there is y in B2 \ B1 with B1 - x + y a basis). S is independent when it
/// is contained in some basis.
inline Matroid explicit_matroid(const ExplicitBases& eb) {
  int n = eb.ground_size;
  if (n < 0 || n > kMaxGroundSize)
    throw FamilyError("explicit matroid ground set size out of range");
  if (eb.bases.empty())
    throw AxiomError("explicit matroid needs at least one basis");
  std::unordered_set<std::uint64_t> seen;
  int r = eb.bases.front().size();
  for (std::size_t i = 0; i < eb.bases.size(); ++i) {
    const Subset& b = eb.bases[i];
    if (b.universe() != n)
      throw FamilyError("basis " + std::to_string(i) +
                        " lives in a different universe");
    if (b.size() != r)
      throw AxiomError("bases differ in size: " +
                       eb.bases.front().to_string() + " and " + b.to_string());
    if (!seen.insert(b.mask()).second)
      throw AxiomError("duplicate basis " + b.to_string());
  }
  for (const Subset& b1 : eb.bases)
    for (const Subset& b2 : eb.bases) {
      for (ElementId x : b1 - b2) {
        bool exchanged = false;
        for (ElementId y : b2 - b1)
          if (seen.count(b1.without(x).with(y).mask())) {
            exchanged = true;
            break;
          }
        if (!exchanged)
          throw AxiomError("basis exchange fails for " + b1.to_string() +
                           ", " + b2.to_string() + " at element " +
                           std::to_string(x));
      }
    }

  std::vector<std::uint64_t> masks;
  masks.reserve(eb.bases.size());
  for (const Subset& b : eb.bases) masks.push_back(b.mask());
  std::string tag = "explicit(n=" + std::to_string(n) + ",bases=" +
                    std::to_string(masks.size()) + ")";
  auto oracle = [masks](const Subset& s) {
    for (std::uint64_t b : masks)
      if ((s.mask() & ~b) == 0) return true;
    return false;
  };
  return Matroid(n, tag, oracle);
}

}  // namespace mar
