#pragma once

#include <string>

#include "mar/matroid.hpp"

namespace mar {

/// Uniform matroid U_{k,n}: every set of at most k elements is independent.
inline Matroid uniform_matroid(int k, int n) {
  if (n < 0 || n > kMaxGroundSize)
    throw FamilyError("uniform matroid needs 0 <= n <= " +
                      std::to_string(kMaxGroundSize) + ", got n = " +
                      std::to_string(n));
  if (k < 0 || k > n)
    throw FamilyError("uniform matroid needs 0 <= k <= n, got k = " +
                      std::to_string(k) + ", n = " + std::to_string(n));
  std::string tag = "uniform(k=" + std::to_string(k) + ",n=" +
                    std::to_string(n) + ")";
  auto oracle = [k](const Subset& s) { return s.size() <= k; };
  return Matroid(n, tag, oracle);
}

}  // namespace mar
