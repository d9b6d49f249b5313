#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace linknav {

/// Subset of {1..64} stored as a bit mask; index i lives in bit i-1.
class IndexSet {
 public:
  static constexpr int kMaxIndex = 64;

  constexpr IndexSet() noexcept = default;
  IndexSet(std::initializer_list<int> indices);

  static constexpr IndexSet from_bits(std::uint64_t bits) noexcept { return IndexSet(bits, 0); }
  static IndexSet single(int index);
  /// {1..n}
  static IndexSet full(int n);
  static IndexSet of(const std::vector<int>& indices);

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  bool contains(int index) const noexcept;
  constexpr bool subset_of(IndexSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(IndexSet other) const noexcept { return (bits_ & other.bits_) != 0; }
  /// Smallest index, or 0 for the empty set.
  int lowest() const noexcept;
  /// Largest index, or 0 for the empty set.
  int highest() const noexcept;
  std::vector<int> indices() const;

  /// Calls f(i) for each index in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) f(std::countr_zero(b) + 1);
  }

  friend constexpr IndexSet operator|(IndexSet a, IndexSet b) noexcept { return from_bits(a.bits_ | b.bits_); }
  friend constexpr IndexSet operator&(IndexSet a, IndexSet b) noexcept { return from_bits(a.bits_ & b.bits_); }
  /// Set difference.
  friend constexpr IndexSet operator-(IndexSet a, IndexSet b) noexcept { return from_bits(a.bits_ & ~b.bits_); }
  IndexSet& operator|=(IndexSet o) noexcept { bits_ |= o.bits_; return *this; }
  IndexSet& operator&=(IndexSet o) noexcept { bits_ &= o.bits_; return *this; }
  IndexSet& operator-=(IndexSet o) noexcept { bits_ &= ~o.bits_; return *this; }

  friend constexpr bool operator==(IndexSet, IndexSet) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(IndexSet a, IndexSet b) noexcept { return a.bits_ <=> b.bits_; }

  /// "{1,4,7}"
  std::string to_string() const;

 private:
  constexpr IndexSet(std::uint64_t bits, int) noexcept : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

}  // namespace linknav
