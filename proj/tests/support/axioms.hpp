#pragma once

// Exhaustive axiom checks over every subset of the ground set, driven only
// by the public matroid interface. Each checker returns how many candidate
// statements it examined and how many failed.

#include <cstdint>
#include <vector>

#include "mar/matroid.hpp"
#include "mar/subset.hpp"

namespace testsupport {

struct AxiomReport {
  long long checks = 0;
  long long violations = 0;
};

/// (I1) the empty set is independent and independence is hereditary;
/// (I2) a smaller independent set extends from any larger one.
inline AxiomReport check_independence_axioms(const mar::Matroid& m) {
  AxiomReport rep;
  int n = m.ground_size();
  std::uint64_t total = std::uint64_t(1) << n;
  std::vector<char> indep(total);
  std::vector<std::uint64_t> indep_masks;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    indep[mask] = m.is_independent(mar::Subset::from_mask(n, mask));
    if (indep[mask]) indep_masks.push_back(mask);
  }

  ++rep.checks;
  if (!indep[0]) ++rep.violations;

  for (std::uint64_t mask : indep_masks)
    for (int e = 0; e < n; ++e)
      if (mask & (std::uint64_t(1) << e)) {
        ++rep.checks;
        if (!indep[mask & ~(std::uint64_t(1) << e)]) ++rep.violations;
      }

  for (std::uint64_t a : indep_masks)
    for (std::uint64_t b : indep_masks) {
      if (std::popcount(a) >= std::popcount(b)) continue;
      ++rep.checks;
      bool extended = false;
      std::uint64_t candidates = b & ~a;
      while (candidates && !extended) {
        std::uint64_t bit = candidates & (~candidates + 1);
        candidates ^= bit;
        if (indep[a | bit]) extended = true;
      }
      if (!extended) ++rep.violations;
    }
  return rep;
}

/// (R1) 0 <= r(S) <= |S|; (R2) monotonicity; (R3) submodularity.
inline AxiomReport check_rank_axioms(const mar::Matroid& m) {
  AxiomReport rep;
  int n = m.ground_size();
  std::uint64_t total = std::uint64_t(1) << n;
  std::vector<int> r(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    r[mask] = m.rank(mar::Subset::from_mask(n, mask));

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    ++rep.checks;
    if (r[mask] < 0 || r[mask] > std::popcount(mask)) ++rep.violations;
  }

  // (R2) over covers S vs S + e, which implies the full relation
  for (std::uint64_t mask = 0; mask < total; ++mask)
    for (int e = 0; e < n; ++e)
      if (!(mask & (std::uint64_t(1) << e))) {
        ++rep.checks;
        std::uint64_t grown = mask | (std::uint64_t(1) << e);
        if (r[mask] > r[grown] || r[grown] > r[mask] + 1) ++rep.violations;
      }

  for (std::uint64_t a = 0; a < total; ++a)
    for (std::uint64_t b = 0; b < total; ++b) {
      ++rep.checks;
      if (r[a | b] + r[a & b] > r[a] + r[b]) ++rep.violations;
    }
  return rep;
}

/// (S1) extensivity; (S2) monotonicity; (S3) idempotence; (S4) the
/// Mac Lane-Steinitz exchange property.
inline AxiomReport check_closure_axioms(const mar::Matroid& m) {
  AxiomReport rep;
  int n = m.ground_size();
  std::uint64_t total = std::uint64_t(1) << n;
  std::vector<std::uint64_t> cl(total);
  for (std::uint64_t mask = 0; mask < total; ++mask)
    cl[mask] = m.closure(mar::Subset::from_mask(n, mask)).mask();

  for (std::uint64_t mask = 0; mask < total; ++mask) {
    rep.checks += 2;
    if ((mask & ~cl[mask]) != 0) ++rep.violations;       // S1
    if (cl[cl[mask]] != cl[mask]) ++rep.violations;      // S3
  }

  // (S2) again via covers
  for (std::uint64_t mask = 0; mask < total; ++mask)
    for (int e = 0; e < n; ++e)
      if (!(mask & (std::uint64_t(1) << e))) {
        ++rep.checks;
        if (cl[mask] & ~cl[mask | (std::uint64_t(1) << e)]) ++rep.violations;
      }

  for (std::uint64_t mask = 0; mask < total; ++mask)
    for (int x = 0; x < n; ++x) {
      if (mask & (std::uint64_t(1) << x)) continue;
      std::uint64_t with_x = cl[mask | (std::uint64_t(1) << x)];
      std::uint64_t gained = with_x & ~cl[mask];
      for (int y = 0; y < n; ++y)
        if (gained & (std::uint64_t(1) << y)) {
          ++rep.checks;
          std::uint64_t with_y = cl[mask | (std::uint64_t(1) << y)];
          if (!(with_y & (std::uint64_t(1) << x))) ++rep.violations;  // S4
        }
    }
  return rep;
}

inline AxiomReport check_all_axioms(const mar::Matroid& m) {
  AxiomReport total;
  for (auto rep : {check_independence_axioms(m), check_rank_axioms(m),
                   check_closure_axioms(m)}) {
    total.checks += rep.checks;
    total.violations += rep.violations;
  }
  return total;
}

}  // namespace testsupport
