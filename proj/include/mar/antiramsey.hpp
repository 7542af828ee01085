#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "mar/coloring.hpp"
#include "mar/errors.hpp"
#include "mar/families/graphic.hpp"
#include "mar/families/bicircular.hpp"
#include "mar/families/linear.hpp"
#include "mar/families/signed.hpp"
#include "mar/families/uniform.hpp"
#include "mar/matroid.hpp"
#include "mar/packing.hpp"
#include "mar/partitions.hpp"
#include "mar/subset.hpp"

namespace mar {

/// Which case of the anti-Ramsey computation produced the value.
enum class ArBranch { degenerate, formula, rank1_degenerate, rank1_formula };

inline std::string to_string(ArBranch b) {
  switch (b) {
    case ArBranch::degenerate: return "degenerate";
    case ArBranch::formula: return "formula";
    case ArBranch::rank1_degenerate: return "rank1-degenerate";
    case ArBranch::rank1_formula: return "rank1-formula";
  }
  return "?";
}

/// The anti-Ramsey number together with the flat that determines it.
/// value is the largest number of color classes for which some coloring of E
/// with that many classes admits no t pairwise disjoint rainbow bases.
struct ArResult {
  int value = 0;
  ArBranch branch = ArBranch::formula;
  /// Maximizer of |F| + t*(r(E) - r(F) - 1) over flats of rank <= r(E) - 2;
  /// present on the formula branch, first in (rank, subset) order on ties.
  std::optional<Flat> argmax_flat;
  /// A flat with |E| - |F| < t*(r(E) - r(F)), i.e. too few elements outside
  /// it for t disjoint bases; present on the degenerate branches.
  std::optional<Flat> degenerate_flat;
};

/// Computes the anti-Ramsey number for t pairwise disjoint rainbow bases.
/// For rank >= 2: if some flat denies t disjoint bases altogether the value
/// is |E| (every coloring avoids); otherwise it is
/// max over flats F with r(F) <= r(E) - 2 of |F| + t*(r(E) - r(F) - 1).
/// For rank 1 with loop set M0: |E| if |E| < |M0| + t, else |M0| + t - 1.
inline ArResult ar_number(const Matroid& m, int t,
                          std::size_t budget = kDefaultNodeBudget) {
  detail::check_packing_inputs(m, t);
  int n = m.ground_size();
  int r = m.rank();

  if (r == 1) {
    Subset m0 = m.loops();
    if (n < m0.size() + t)
      return ArResult{n, ArBranch::rank1_degenerate, std::nullopt,
                      Flat{m0, 0}};
    return ArResult{m0.size() + t - 1, ArBranch::rank1_formula, std::nullopt,
                    std::nullopt};
  }

  auto flats = m.flats(-1, budget);
  for (const Flat& f : flats) {
    long long lhs = n - f.elements.size();
    long long rhs = static_cast<long long>(t) * (r - f.rank);
    if (lhs < rhs)
      return ArResult{n, ArBranch::degenerate, std::nullopt, f};
  }
  int best = -1;
  std::optional<Flat> arg;
  for (const Flat& f : flats) {
    if (f.rank > r - 2) continue;
    int value = f.elements.size() + t * (r - f.rank - 1);
    if (value > best) {
      best = value;
      arg = f;
    }
  }
  return ArResult{best, ArBranch::formula, arg, std::nullopt};
}

/// Rank-2 shortcut computed without flat enumeration: the value is |E| when
/// |E| < |M0| + 2t or some rank-1 element x has |E| < |cl({x})| + t, and
/// |M0| + t otherwise. Agrees with ar_number on every rank-2 matroid.
inline int ar_rank2_special(const Matroid& m, int t) {
  detail::check_packing_inputs(m, t);
  if (m.rank() != 2)
    throw ContractError("ar_rank2_special requires a matroid of rank 2");
  int n = m.ground_size();
  Subset m0 = m.loops();
  if (n < m0.size() + 2 * t) return n;
  for (ElementId e : ~m0) {
    Subset cl = m.closure(Subset::singleton(n, e));
    if (n < cl.size() + t) return n;
  }
  return m0.size() + t;
}

/// A coloring achieving the anti-Ramsey value: it uses exactly ar_number
/// colors and admits no t pairwise disjoint rainbow bases.
struct ExtremalColoring {
  Coloring coloring;
  /// The flat the construction is built around.
  Flat flat_used;
  /// For t >= 2 on the formula branch, the one color class shared by the
  /// tail of E \ F; absent otherwise.
  std::optional<int> shared_color;
  ArBranch branch;
};

/// Builds an extremal coloring for a matroid of rank >= 2. On the formula
/// branch with argmax flat F: F is colored with fresh singleton colors; for
/// t = 1 the rest of E is spread round-robin over r(E) - r(F) - 1 classes;
/// for t >= 2 the first t*(r(E) - r(F) - 1) - 1 elements of E \ F (in
/// element order) get fresh colors and the tail shares one final color.
/// On the degenerate branch every element gets its own color.
/// The construction is checked by a complete search for a packing, which
/// must come back empty.
inline ExtremalColoring extremal_coloring(const Matroid& m, int t,
                                          std::size_t budget = kDefaultNodeBudget,
                                          bool validate = true) {
  detail::check_packing_inputs(m, t);
  if (m.rank() < 2)
    throw ContractError("extremal_coloring requires a matroid of rank >= 2");
  int n = m.ground_size();
  int r = m.rank();
  ArResult ar = ar_number(m, t, budget);

  std::vector<int> raw(n, 0);
  Flat flat_used{Subset(n), 0};
  bool has_shared = false;
  ElementId shared_elem = -1;

  if (ar.branch == ArBranch::degenerate) {
    for (int e = 0; e < n; ++e) raw[e] = e;
    flat_used = *ar.degenerate_flat;
  } else {
    const Flat& f = *ar.argmax_flat;
    flat_used = f;
    int next = 0;
    for (ElementId e : f.elements) raw[e] = next++;
    std::vector<ElementId> rest = (~f.elements).elements();
    if (t == 1) {
      int classes = r - f.rank - 1;
      for (std::size_t i = 0; i < rest.size(); ++i)
        raw[rest[i]] = next + static_cast<int>(i) % classes;
    } else {
      int fresh = t * (r - f.rank - 1) - 1;
      for (std::size_t i = 0; i < rest.size(); ++i)
        raw[rest[i]] =
            next + std::min(static_cast<int>(i), fresh);
      has_shared = true;
      shared_elem = rest[fresh];
    }
  }

  Coloring col(n, raw);
  if (col.num_colors() != ar.value)
    throw Error("internal error: extremal coloring has " +
                std::to_string(col.num_colors()) + " colors, expected " +
                std::to_string(ar.value));
  if (validate && find_rainbow_bases(m, col, t, budget))
    throw Error("internal error: extremal coloring admits a packing");

  ExtremalColoring out{std::move(col), flat_used, std::nullopt, ar.branch};
  if (has_shared) out.shared_color = out.coloring.color_of(shared_elem);
  return out;
}

/// Exhaustive anti-Ramsey number: the maximum number of classes of a set
/// partition of E admitting no t disjoint rainbow bases, over every set
/// partition of E. Supports |E| <= 10. Returns 0 when no partition avoids
/// (possible only in rank 1).
inline int ar_bruteforce(const Matroid& m, int t,
                         std::size_t budget = kDefaultNodeBudget) {
  detail::check_packing_inputs(m, t);
  int n = m.ground_size();
  if (n > 10)
    throw ContractError("ar_bruteforce supports ground sets of at most 10 "
                        "elements, got " + std::to_string(n));
  int best = 0;
  for_each_set_partition(n, [&](const std::vector<int>& rgs, int classes) {
    if (classes <= best) return;
    Coloring c(n, rgs);
    if (!find_rainbow_bases(m, c, t, budget)) best = classes;
  });
  return best;
}

/// Parameterized instance families with closed-form anti-Ramsey values.
struct FamilyParams {
  enum class Family { graphic_kn, bicircular_kn, signed_kn, uniform, cube };
  Family family = Family::graphic_kn;
  int n = 0;      // K_n order, or the uniform ground-set size
  int k = 0;      // uniform rank
  int tsize = 0;  // cube |T|
  int d = 0;      // cube dimension
  int t = 1;      // bases sought

  std::string to_string() const {
    switch (family) {
      case Family::graphic_kn:
        return "graphic-Kn n=" + std::to_string(n) + " t=" + std::to_string(t);
      case Family::bicircular_kn:
        return "bicircular-Kn n=" + std::to_string(n) +
               " t=" + std::to_string(t);
      case Family::signed_kn:
        return "signed-Kn n=" + std::to_string(n) + " t=" + std::to_string(t);
      case Family::uniform:
        return "uniform n=" + std::to_string(n) + " k=" + std::to_string(k) +
               " t=" + std::to_string(t);
      case Family::cube:
        return "cube |T|=" + std::to_string(tsize) +
               " d=" + std::to_string(d) + " t=" + std::to_string(t);
    }
    return "?";
  }
};

namespace detail {

inline long long choose2(long long n) { return n * (n - 1) / 2; }

inline constexpr long long kPowClamp = (1LL << 62);

inline long long pow_clamped(long long base, int exp) {
  long long v = 1;
  for (int i = 0; i < exp; ++i) {
    if (v > kPowClamp / base) return kPowClamp;
    v *= base;
  }
  return v;
}

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace detail

/// Closed-form anti-Ramsey values for the parameterized families. Pure
/// arithmetic; no instance is built, so the parameters may exceed the
/// 64-element instance cap.
inline long long closed_form(const FamilyParams& p) {
  long long t = p.t;
  if (t < 1) throw ContractError("closed_form needs t >= 1");
  switch (p.family) {
    case FamilyParams::Family::graphic_kn: {
      long long n = p.n;
      if (n < 1) throw ContractError("closed_form graphic-Kn needs n >= 1");
      if (n < 2 * t) return detail::choose2(n);
      if (n <= 2 * t + 1) return t * (n - 2);
      return detail::choose2(n - 2) + t;
    }
    case FamilyParams::Family::bicircular_kn: {
      long long n = p.n;
      if (n < 3) throw ContractError("closed_form bicircular-Kn needs n >= 3");
      if (n <= 2 * t) return detail::choose2(n);
      if (n <= 2 * t + 3) return t * (n - 1);
      return detail::choose2(n - 2) + t;
    }
    case FamilyParams::Family::signed_kn: {
      long long n = p.n;
      if (n < 3) throw ContractError("closed_form signed-Kn needs n >= 3");
      if (n <= t) return 2 * detail::choose2(n);
      // A flat splits the vertices into balanced blocks (one switching
      // class each, choose2 edges) and at most one block keeping both
      // parallel edges. Convexity pushes the maximum of |F| + t(b - 1) to
      // three corners: the doubled block on n - 2 vertices with two
      // balanced singletons, all balanced singletons, and one balanced
      // block on n - 1 vertices with one singleton. The last corner wins
      // only at n = 4, t = 1.
      return std::max({2 * detail::choose2(n - 2) + t, t * (n - 1),
                       detail::choose2(n - 1) + t});
    }
    case FamilyParams::Family::uniform: {
      long long n = p.n, k = p.k;
      if (k < 1 || k > n)
        throw ContractError("closed_form uniform needs 1 <= k <= n");
      if (n < k * t) return n;
      return t * (k - 1);
    }
    case FamilyParams::Family::cube: {
      long long size = p.tsize;
      int d = p.d;
      if (size < 2) throw ContractError("closed_form cube needs |T| >= 2");
      if (d < 3) throw ContractError("closed_form cube needs d >= 3");
      long long whole = detail::pow_clamped(size, d);
      long long small = detail::pow_clamped(size, d - 2);
      if (t * static_cast<long long>(d) >= whole) {
        if (whole >= detail::kPowClamp)
          throw ContractError("closed_form cube parameters too large");
        return whole;
      }
      if (t * static_cast<long long>(d - 2) >= small) return 1 + t * (d - 1);
      if (small >= detail::kPowClamp)
        throw ContractError("closed_form cube parameters too large");
      return small + t;
    }
  }
  throw ContractError("unknown family");
}

/// Builds the matroid instance for a parameter point. The instance must fit
/// the 64-element cap.
inline Matroid build_family_instance(const FamilyParams& p) {
  switch (p.family) {
    case FamilyParams::Family::graphic_kn:
      if (p.n < 2) throw ContractError("graphic-Kn instance needs n >= 2");
      return graphic_matroid(Multigraph::complete(p.n));
    case FamilyParams::Family::bicircular_kn:
      if (p.n < 3) throw ContractError("bicircular-Kn instance needs n >= 3");
      return bicircular_matroid(Multigraph::complete(p.n));
    case FamilyParams::Family::signed_kn:
      if (p.n < 2) throw ContractError("signed-Kn instance needs n >= 2");
      return signed_matroid(SignedMultigraph::complete_doubled(p.n));
    case FamilyParams::Family::uniform:
      return uniform_matroid(p.k, p.n);
    case FamilyParams::Family::cube: {
      if (p.tsize < 2 || p.d < 2)
        throw ContractError("cube instance needs |T| >= 2 and d >= 2");
      std::vector<Rational> values;
      for (int v = 0; v < p.tsize; ++v) values.push_back(Rational(v));
      Field field = detail::is_prime(p.tsize) ? Field::gf(p.tsize)
                                              : Field::rationals();
      return cube_matroid(values, p.d, field);
    }
  }
  throw ContractError("unknown family");
}

/// One row of a formula-vs-closed-form-vs-brute-force comparison.
struct VerifyReport {
  FamilyParams params;
  int ground_size = 0;
  int rank = 0;
  int ar_formula = 0;
  long long ar_closed = 0;
  std::optional<int> ar_brute;
  bool agree = false;
};

/// Cross-checks one parameter point: the flat-based formula against the
/// closed form, and against exhaustive search when the instance has at most
/// 10 elements.
inline VerifyReport cross_verify(const FamilyParams& p, const Matroid& m,
                                 std::size_t budget = kDefaultNodeBudget) {
  VerifyReport rep;
  rep.params = p;
  rep.ground_size = m.ground_size();
  rep.rank = m.rank();
  rep.ar_formula = ar_number(m, p.t, budget).value;
  rep.ar_closed = closed_form(p);
  if (m.ground_size() <= 10) rep.ar_brute = ar_bruteforce(m, p.t, budget);
  rep.agree = rep.ar_formula == rep.ar_closed &&
              (!rep.ar_brute || *rep.ar_brute == rep.ar_formula);
  return rep;
}

inline VerifyReport cross_verify(const FamilyParams& p,
                                 std::size_t budget = kDefaultNodeBudget) {
  Matroid m = build_family_instance(p);
  return cross_verify(p, m, budget);
}

/// Cross-verifies a list of parameter points, reusing one instance across
/// consecutive points that differ only in t, optionally across jobs worker
/// threads. The report order matches the input order regardless of jobs.
inline std::vector<VerifyReport> cross_verify_grid(
    const std::vector<FamilyParams>& points,
    std::size_t budget = kDefaultNodeBudget, int jobs = 1) {
  auto same_instance = [](const FamilyParams& a, const FamilyParams& b) {
    return a.family == b.family && a.n == b.n && a.k == b.k &&
           a.tsize == b.tsize && a.d == b.d;
  };
  struct Group {
    std::size_t begin, end;
  };
  std::vector<Group> groups;
  for (std::size_t i = 0; i < points.size();) {
    std::size_t j = i + 1;
    while (j < points.size() && same_instance(points[i], points[j])) ++j;
    groups.push_back(Group{i, j});
    i = j;
  }

  std::vector<VerifyReport> reports(points.size());
  auto run_group = [&](const Group& g) {
    Matroid m = build_family_instance(points[g.begin]);
    for (std::size_t i = g.begin; i < g.end; ++i)
      reports[i] = cross_verify(points[i], m, budget);
  };

  if (jobs <= 1 || groups.size() <= 1) {
    for (const Group& g : groups) run_group(g);
    return reports;
  }

  std::atomic<std::size_t> next{0};
  std::mutex err_mu;
  std::exception_ptr first_error;
  std::size_t first_error_group = groups.size();
  auto worker = [&]() {
    for (;;) {
      std::size_t idx = next.fetch_add(1);
      if (idx >= groups.size()) return;
      try {
        run_group(groups[idx]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mu);
        if (idx < first_error_group) {
          first_error_group = idx;
          first_error = std::current_exception();
        }
      }
    }
  };
  std::vector<std::thread> threads;
  int count = std::min<std::size_t>(jobs, groups.size());
  for (int i = 0; i < count; ++i) threads.emplace_back(worker);
  for (auto& th : threads) th.join();
  if (first_error) std::rethrow_exception(first_error);
  return reports;
}

}  // namespace mar
