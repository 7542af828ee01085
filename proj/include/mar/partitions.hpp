#pragma once

#include <vector>

#include "mar/errors.hpp"

namespace mar {

/// Enumerates every set partition of {0,...,n-1} in lexicographic
/// restricted-growth-string order and calls fn(rgs, num_classes) for each.
/// The RGS is the canonical coloring vector: rgs[0] = 0 and each entry is at
/// most one above the maximum of the entries before it.
template <typename Fn>
void for_each_set_partition(int n, Fn&& fn) {
  if (n < 0) throw ContractError("negative ground set size");
  if (n == 0) return;
  std::vector<int> rgs(n, 0);
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n) {
      fn(static_cast<const std::vector<int>&>(rgs), max_used + 1);
      return;
    }
    for (int v = 0; v <= max_used + 1; ++v) {
      rgs[pos] = v;
      self(self, pos + 1, v > max_used ? v : max_used);
    }
  };
  rec(rec, 1, 0);
}

}  // namespace mar
