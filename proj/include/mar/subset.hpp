#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "mar/errors.hpp"

namespace mar {

/// Elements of a ground set are dense indices 0..n-1.
using ElementId = int;

/// Hard cap on the ground-set size: a subset is one 64-bit word.
inline constexpr int kMaxGroundSize = 64;

/// A subset of a fixed ground set {0,...,universe-1}, stored as a bit mask.
/// All set algebra is exact and O(1); mixing subsets of different universes
/// is a contract violation, as is touching an element outside the universe.
class Subset {
 public:
  Subset() = default;

  /// The empty subset of a ground set of the given size.
  explicit Subset(int universe) : universe_(checked_universe(universe)) {}

  /// The full ground set {0,...,universe-1}.
  static Subset full(int universe) {
    Subset s(universe);
    if (universe > 0) s.bits_ = ~std::uint64_t{0} >> (64 - universe);
    return s;
  }

  static Subset of(int universe, std::initializer_list<ElementId> elems) {
    Subset s(universe);
    for (ElementId e : elems) s.add(e);
    return s;
  }

  static Subset of(int universe, const std::vector<ElementId>& elems) {
    Subset s(universe);
    for (ElementId e : elems) s.add(e);
    return s;
  }

  static Subset singleton(int universe, ElementId e) {
    Subset s(universe);
    s.add(e);
    return s;
  }

  /// Builds a subset from a raw mask; bits at or above the universe size are
  /// rejected as malformed.
  static Subset from_mask(int universe, std::uint64_t bits) {
    Subset s(universe);
    if (universe < 64 && (bits >> universe) != 0)
      throw ContractError("subset mask has bits outside the universe");
    s.bits_ = bits;
    return s;
  }

  int universe() const noexcept { return universe_; }
  std::uint64_t mask() const noexcept { return bits_; }

  int size() const noexcept { return std::popcount(bits_); }
  bool empty() const noexcept { return bits_ == 0; }

  bool contains(ElementId e) const {
    check_element(e);
    return (bits_ >> e) & 1u;
  }

  Subset& add(ElementId e) {
    check_element(e);
    bits_ |= std::uint64_t{1} << e;
    return *this;
  }

  Subset& remove(ElementId e) {
    check_element(e);
    bits_ &= ~(std::uint64_t{1} << e);
    return *this;
  }

  Subset with(ElementId e) const {
    Subset s(*this);
    s.add(e);
    return s;
  }

  Subset without(ElementId e) const {
    Subset s(*this);
    s.remove(e);
    return s;
  }

  Subset operator|(const Subset& o) const {
    check_same(o);
    return raw(universe_, bits_ | o.bits_);
  }
  Subset operator&(const Subset& o) const {
    check_same(o);
    return raw(universe_, bits_ & o.bits_);
  }
  /// Set difference.
  Subset operator-(const Subset& o) const {
    check_same(o);
    return raw(universe_, bits_ & ~o.bits_);
  }
  /// Complement within the universe.
  Subset operator~() const { return raw(universe_, ~bits_ & full(universe_).bits_); }

  Subset& operator|=(const Subset& o) { return *this = *this | o; }
  Subset& operator&=(const Subset& o) { return *this = *this & o; }
  Subset& operator-=(const Subset& o) { return *this = *this - o; }

  bool is_subset_of(const Subset& o) const {
    check_same(o);
    return (bits_ & ~o.bits_) == 0;
  }
  bool intersects(const Subset& o) const {
    check_same(o);
    return (bits_ & o.bits_) != 0;
  }

  bool operator==(const Subset& o) const {
    return universe_ == o.universe_ && bits_ == o.bits_;
  }
  bool operator!=(const Subset& o) const { return !(*this == o); }

  /// Total order: by universe, then by mask value. The mask order is the
  /// canonical subset order used everywhere results are sorted or tie-broken.
  bool operator<(const Subset& o) const {
    if (universe_ != o.universe_) return universe_ < o.universe_;
    return bits_ < o.bits_;
  }

  /// Iterates over members in increasing order.
  class iterator {
   public:
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    ElementId operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    bool operator!=(const iterator& o) const { return rest_ != o.rest_; }

   private:
    std::uint64_t rest_;
  };
  iterator begin() const { return iterator(bits_); }
  iterator end() const { return iterator(0); }

  std::vector<ElementId> elements() const {
    std::vector<ElementId> out;
    out.reserve(size());
    for (ElementId e : *this) out.push_back(e);
    return out;
  }

  /// Smallest member; the subset must be nonempty.
  ElementId min() const {
    if (empty()) throw ContractError("min() on an empty subset");
    return std::countr_zero(bits_);
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (ElementId e : *this) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    out += "}";
    return out;
  }

 private:
  static Subset raw(int universe, std::uint64_t bits) {
    Subset s(universe);
    s.bits_ = bits;
    return s;
  }

  static int checked_universe(int universe) {
    if (universe < 0 || universe > kMaxGroundSize)
      throw ContractError("ground set size " + std::to_string(universe) +
                          " outside the supported range 0.." +
                          std::to_string(kMaxGroundSize));
    return universe;
  }

  void check_element(ElementId e) const {
    if (e < 0 || e >= universe_)
      throw ContractError("element " + std::to_string(e) +
                          " outside the universe of size " +
                          std::to_string(universe_));
  }

  void check_same(const Subset& o) const {
    if (universe_ != o.universe_)
      throw ContractError("set operation on subsets of different universes");
  }

  std::uint64_t bits_ = 0;
  int universe_ = 0;
};

}  // namespace mar
