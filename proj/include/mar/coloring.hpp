#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "mar/errors.hpp"
#include "mar/matroid.hpp"
#include "mar/subset.hpp"

namespace mar {

/// A surjective coloring of a ground set 0..n-1. Colorings are set
/// partitions: on construction the color ids are canonicalized by first
/// occurrence (element 0's class becomes color 0, the next new class color 1,
/// and so on), so two inputs that induce the same partition compare equal.
/// Since n <= 64, color sets fit in a 64-bit mask as well.
class Coloring {
 public:
  Coloring(int ground_size, const std::vector<int>& raw)
      : color_of_(ground_size, 0) {
    if (ground_size < 0 || ground_size > kMaxGroundSize)
      throw ContractError("coloring ground set size out of range");
    if (static_cast<int>(raw.size()) != ground_size)
      throw ContractError("coloring has " + std::to_string(raw.size()) +
                          " entries for a ground set of size " +
                          std::to_string(ground_size));
    std::vector<std::pair<int, int>> relabel;
    for (int e = 0; e < ground_size; ++e) {
      int c = -1;
      for (auto& [from, to] : relabel)
        if (from == raw[e]) c = to;
      if (c < 0) {
        c = static_cast<int>(relabel.size());
        relabel.emplace_back(raw[e], c);
      }
      color_of_[e] = c;
    }
    num_colors_ = static_cast<int>(relabel.size());
    class_masks_.assign(num_colors_, Subset(ground_size));
    for (int e = 0; e < ground_size; ++e) class_masks_[color_of_[e]].add(e);
  }

  /// Every element its own color.
  static Coloring all_distinct(int n) {
    std::vector<int> raw(n);
    for (int e = 0; e < n; ++e) raw[e] = e;
    return Coloring(n, raw);
  }

  int ground_size() const noexcept { return static_cast<int>(color_of_.size()); }
  int num_colors() const noexcept { return num_colors_; }

  int color_of(ElementId e) const {
    if (e < 0 || e >= ground_size())
      throw ContractError("element out of range in coloring lookup");
    return color_of_[e];
  }

  /// Bit mask with the single bit of e's color set.
  std::uint64_t color_bit(ElementId e) const {
    return std::uint64_t{1} << color_of(e);
  }

  /// Mask of the colors that appear on s.
  std::uint64_t colors_in(const Subset& s) const {
    if (s.universe() != ground_size())
      throw ContractError("subset universe does not match coloring");
    std::uint64_t out = 0;
    for (ElementId e : s) out |= std::uint64_t{1} << color_of_[e];
    return out;
  }

  /// Number of distinct colors on s.
  int count_colors_in(const Subset& s) const {
    return std::popcount(colors_in(s));
  }

  /// True when no color repeats on s.
  bool is_rainbow(const Subset& s) const { return count_colors_in(s) == s.size(); }

  const Subset& color_class(int c) const {
    if (c < 0 || c >= num_colors_)
      throw ContractError("color id out of range");
    return class_masks_[c];
  }

  bool operator==(const Coloring& o) const { return color_of_ == o.color_of_; }
  bool operator!=(const Coloring& o) const { return !(*this == o); }

  std::string to_string() const {
    std::string out;
    for (int e = 0; e < ground_size(); ++e) {
      if (e) out += " ";
      out += std::to_string(color_of_[e]);
    }
    return out;
  }

 private:
  std::vector<int> color_of_;
  int num_colors_ = 0;
  std::vector<Subset> class_masks_;
};

/// Color bookkeeping of a flat F against the rest of the ground set:
/// eta counts colors saved inside F (|F| minus the number of colors on F),
/// xi counts colors shared between F and its complement.
struct ColorStats {
  int eta = 0;
  int xi = 0;
};

inline ColorStats color_stats(const Matroid& m, const Coloring& c,
                              const Subset& f) {
  if (c.ground_size() != m.ground_size())
    throw ContractError("coloring does not match the matroid's ground set");
  if (!m.is_flat(f))
    throw ContractError("color_stats requires a flat, got " + f.to_string());
  ColorStats out;
  std::uint64_t inside = c.colors_in(f);
  std::uint64_t outside = c.colors_in(~f);
  out.eta = f.size() - std::popcount(inside);
  out.xi = std::popcount(inside & outside);
  return out;
}

}  // namespace mar
