#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace fold9 {

/// Set of colors drawn from 1..31, stored as a bitmask (bit c = color c).
class ColorSet {
 public:
  static constexpr int kMaxColor = 31;

  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits & ~1u) {}
  constexpr ColorSet(std::initializer_list<int> colors) {
    for (int c : colors) insert(c);
  }

  /// {lo, ..., hi}; empty when hi < lo.
  static constexpr ColorSet range(int lo, int hi) {
    ColorSet s;
    for (int c = lo; c <= hi; ++c) s.insert(c);
    return s;
  }

  constexpr std::uint32_t bits() const noexcept { return bits_; }
  constexpr bool contains(int c) const noexcept {
    return c >= 1 && c <= kMaxColor && ((bits_ >> c) & 1u);
  }
  constexpr void insert(int c) noexcept { bits_ |= (1u << c); }
  constexpr void erase(int c) noexcept { bits_ &= ~(1u << c); }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr bool disjoint(ColorSet o) const noexcept { return (bits_ & o.bits_) == 0; }
  constexpr bool subset_of(ColorSet o) const noexcept { return (bits_ & ~o.bits_) == 0; }

  /// Smallest color, or 0 when empty.
  constexpr int min() const noexcept { return bits_ ? std::countr_zero(bits_) : 0; }
  /// Largest color, or 0 when empty.
  constexpr int max() const noexcept { return bits_ ? 31 - std::countl_zero(bits_) : 0; }

  /// The `count` smallest members.
  constexpr ColorSet smallest(int count) const noexcept {
    ColorSet out;
    std::uint32_t rest = bits_;
    while (rest && count-- > 0) {
      std::uint32_t low = rest & (~rest + 1);
      out.bits_ |= low;
      rest &= rest - 1;
    }
    return out;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint32_t rest = bits_; rest; rest &= rest - 1) out.push_back(std::countr_zero(rest));
    return out;
  }

  /// "{1,2}" style rendering.
  std::string str() const {
    std::string s = "{";
    bool first = true;
    for (int c : to_vector()) {
      if (!first) s += ',';
      s += std::to_string(c);
      first = false;
    }
    return s + "}";
  }

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  constexpr ColorSet& operator|=(ColorSet o) { bits_ |= o.bits_; return *this; }
  constexpr ColorSet& operator&=(ColorSet o) { bits_ &= o.bits_; return *this; }
  constexpr ColorSet& operator-=(ColorSet o) { bits_ &= ~o.bits_; return *this; }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

/// Every `size`-subset of `pool`, lexicographic in the sorted members.
inline std::vector<ColorSet> subsets_of_size(ColorSet pool, int size) {
  std::vector<ColorSet> out;
  if (size < 0 || size > pool.size()) return out;
  std::vector<int> members = pool.to_vector();
  std::vector<int> idx(size);
  for (int i = 0; i < size; ++i) idx[i] = i;
  const int n = static_cast<int>(members.size());
  while (true) {
    ColorSet s;
    for (int i : idx) s.insert(members[i]);
    out.push_back(s);
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

/// A t-fold coloring: every vertex gets a set of `fold` colors from
/// {1..palette}.
struct FoldColoring {
  int fold = 2;
  int palette = 9;
  std::vector<ColorSet> sets;

  friend bool operator==(const FoldColoring&, const FoldColoring&) = default;
};

}  // namespace fold9
