#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mar/errors.hpp"
#include "mar/subset.hpp"

namespace mar {

/// Default node budget for enumerations and searches.
inline constexpr std::size_t kDefaultNodeBudget = 10'000'000;

/// A flat together with its rank.
struct Flat {
  Subset elements;
  int rank = 0;

  bool operator==(const Flat& o) const {
    return rank == o.rank && elements == o.elements;
  }
};

/// Enumeration order for flats: by rank, then by canonical subset order.
inline bool flat_less(const Flat& a, const Flat& b) {
  if (a.rank != b.rank) return a.rank < b.rank;
  return a.elements < b.elements;
}

inline std::string to_string(const Flat& f) {
  return f.elements.to_string() + " (rank " + std::to_string(f.rank) + ")";
}

using IndependenceOracle = std::function<bool(const Subset&)>;

/// A matroid on a dense ground set 0..n-1, described by an independence
/// oracle. Rank, closure and flat enumeration are derived from the oracle;
/// instances are immutable and safe to share across threads (the internal
/// memo tables are synchronized).
class Matroid {
 public:
  Matroid(int ground_size, std::string family_tag, IndependenceOracle oracle)
      : n_(ground_size),
        tag_(std::move(family_tag)),
        indep_(std::move(oracle)),
        memo_(std::make_unique<Memo>()) {
    if (n_ < 0 || n_ > kMaxGroundSize)
      throw ContractError("ground set size " + std::to_string(n_) +
                          " outside the supported range 0.." +
                          std::to_string(kMaxGroundSize));
    if (!indep_) throw ContractError("null independence oracle");
    if (!indep_(Subset(n_)))
      throw ContractError("independence oracle rejects the empty set");
  }

  Matroid(Matroid&&) = default;
  Matroid& operator=(Matroid&&) = default;

  int ground_size() const noexcept { return n_; }
  Subset ground() const { return Subset::full(n_); }
  const std::string& family_tag() const noexcept { return tag_; }

  bool is_independent(const Subset& s) const {
    check_universe(s);
    return indep_(s);
  }

  /// Rank of a subset, by greedy extension in element order. Memoized.
  int rank(const Subset& s) const {
    check_universe(s);
    {
      std::lock_guard<std::mutex> lock(memo_->mu);
      auto it = memo_->rank.find(s.mask());
      if (it != memo_->rank.end()) return it->second;
    }
    int r = greedy_basis_unchecked(s, Subset(n_)).size();
    std::lock_guard<std::mutex> lock(memo_->mu);
    memo_->rank.emplace(s.mask(), r);
    return r;
  }

  /// Rank of the whole ground set.
  int rank() const { return rank(ground()); }

  /// A maximal independent subset of s avoiding `forbidden`, built greedily
  /// in increasing element order (deterministic).
  Subset greedy_basis(const Subset& s, const Subset& forbidden) const {
    check_universe(s);
    check_universe(forbidden);
    return greedy_basis_unchecked(s, forbidden);
  }

  Subset greedy_basis(const Subset& s) const {
    return greedy_basis(s, Subset(n_));
  }

  /// Closure: all elements whose addition does not raise the rank of s.
  Subset closure(const Subset& s) const {
    check_universe(s);
    Subset b = greedy_basis_unchecked(s, Subset(n_));
    return closure_of_independent(b, s);
  }

  bool is_flat(const Subset& s) const { return closure(s) == s; }

  /// The rank-0 flat: loops of the matroid.
  Subset loops() const { return closure(Subset(n_)); }

  /// All flats of rank <= max_rank, sorted by (rank, canonical subset order).
  /// max_rank < 0 means every flat. Enumeration walks independent sets in
  /// element order, closes each one, and deduplicates the closures; each
  /// visited independent set counts one node against the budget.
  std::vector<Flat> flats(int max_rank = -1,
                          std::size_t budget = kDefaultNodeBudget) const {
    int r = rank();
    int limit = (max_rank < 0 || max_rank > r) ? r : max_rank;
    {
      std::lock_guard<std::mutex> lock(memo_->mu);
      if (memo_->all_flats) {
        if (limit == r) return *memo_->all_flats;
        std::vector<Flat> out;
        for (const Flat& f : *memo_->all_flats) {
          if (f.rank > limit) break;
          out.push_back(f);
        }
        return out;
      }
    }

    std::unordered_set<std::uint64_t> seen;
    std::vector<Flat> out;
    std::size_t nodes = 0;
    std::vector<std::pair<Subset, ElementId>> stack;
    stack.emplace_back(Subset(n_), -1);
    while (!stack.empty()) {
      auto [s, last] = stack.back();
      stack.pop_back();
      if (++nodes > budget)
        throw BudgetError("flat enumeration exceeded its node budget", nodes);
      Subset cl = closure_of_independent(s, s);
      if (seen.insert(cl.mask()).second) out.push_back(Flat{cl, s.size()});
      if (s.size() == limit) continue;
      for (ElementId e = n_ - 1; e > last; --e) {
        Subset ext = s.with(e);
        if (indep_(ext)) stack.emplace_back(ext, e);
      }
    }
    std::sort(out.begin(), out.end(), flat_less);

    if (limit == r) {
      std::lock_guard<std::mutex> lock(memo_->mu);
      if (!memo_->all_flats) memo_->all_flats = out;
    }
    return out;
  }

 private:
  struct Memo {
    std::mutex mu;
    std::unordered_map<std::uint64_t, int> rank;
    std::optional<std::vector<Flat>> all_flats;
  };

  Subset greedy_basis_unchecked(const Subset& s, const Subset& forbidden) const {
    Subset cur(n_);
    for (ElementId e : s - forbidden)
      if (indep_(cur.with(e))) cur.add(e);
    return cur;
  }

  /// Closure of an independent set b; `within` is a subset known to be
  /// spanned by b already (its elements skip the oracle probe).
  Subset closure_of_independent(const Subset& b, const Subset& within) const {
    Subset res = b | within;
    for (ElementId e : ~res)
      if (!indep_(b.with(e))) res.add(e);
    return res;
  }

  void check_universe(const Subset& s) const {
    if (s.universe() != n_)
      throw ContractError("subset universe " + std::to_string(s.universe()) +
                          " does not match ground set size " +
                          std::to_string(n_));
  }

  int n_;
  std::string tag_;
  IndependenceOracle indep_;
  std::unique_ptr<Memo> memo_;
};

}  // namespace mar
