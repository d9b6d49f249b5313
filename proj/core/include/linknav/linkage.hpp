#pragma once

#include "linknav/error.hpp"
#include "linknav/index_set.hpp"
#include "linknav/rational.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace linknav {

/// Thrown when some subset sums to exactly half the perimeter.
class NonGenericError : public InputError {
 public:
  NonGenericError(IndexSet witness, const std::string& what)
      : InputError(ErrorCode::NonGeneric, what), witness_(witness) {}
  IndexSet witness() const noexcept { return witness_; }

 private:
  IndexSet witness_;
};

/// Thrown when some edge is at least as long as all the others together.
class TriangleInequalityError : public InputError {
 public:
  TriangleInequalityError(int index, const std::string& what)
      : InputError(ErrorCode::TriangleInequalityViolated, what), index_(index) {}
  int index() const noexcept { return index_; }

 private:
  int index_;
};

/// A closed planar polygonal linkage with exact rational edge lengths.
///
/// Instances are immutable and always validated: positive lengths, the
/// triangle inequality and genericity. Short/long decisions are exact; they
/// run on integer weights obtained by clearing denominators.
class Linkage {
 public:
  /// Largest n for which genericity is decided by an exhaustive scan.
  static constexpr int kExhaustiveGenericityLimit = 24;

  static Linkage create(std::vector<Rational> lengths);
  static Linkage from_integers(const std::vector<long long>& lengths);

  int size() const noexcept { return n_; }
  /// 1-based.
  const Rational& length(int index) const { return lengths_.at(static_cast<std::size_t>(index - 1)); }
  const std::vector<Rational>& lengths() const noexcept { return lengths_; }
  const Rational& perimeter() const noexcept { return perimeter_; }
  IndexSet all() const noexcept { return IndexSet::full(n_); }

  /// Longest edge, ties broken by the smallest index.
  int longest() const noexcept { return order_[0]; }
  /// Indices sorted by decreasing length (ties by index).
  const std::vector<int>& by_length() const noexcept { return order_; }

  Rational sum(IndexSet set) const;
  /// sum(set) - perimeter/2
  Rational excess(IndexSet set) const;
  bool is_short(IndexSet set) const noexcept;
  bool is_long(IndexSet set) const noexcept { return !is_short(set); }

  /// False when n exceeds the exhaustive limit and genericity rests on the
  /// randomized certificate only.
  bool genericity_certified() const noexcept { return certified_; }

  /// The moduli space is connected iff the 2nd and 3rd longest edges form a
  /// short pair.
  bool is_connected() const noexcept;

  /// Every pair containing the longest edge is long.
  bool is_bow() const noexcept;

  /// Double approximation of each length, 1-based index i at position i-1.
  std::vector<double> lengths_double() const;
  double perimeter_double() const;

  /// Linkage whose edge i is this linkage's edge order[i-1].
  Linkage permuted(const std::vector<int>& order) const;

  /// Integer weights: l_i = weight_i / D for a common D.
  bool has_fast_weights() const noexcept { return fast_; }
  const std::vector<std::int64_t>& fast_weights() const noexcept { return fast_w_; }
  std::int64_t fast_total() const noexcept { return fast_total_; }
  const std::vector<BigInt>& weights() const noexcept { return big_w_; }
  const BigInt& total_weight() const noexcept { return big_total_; }

  friend bool operator==(const Linkage& a, const Linkage& b) { return a.lengths_ == b.lengths_; }

 private:
  Linkage() = default;
  void init_weights();
  void check_genericity();

  int n_ = 0;
  std::vector<Rational> lengths_;
  Rational perimeter_;
  std::vector<int> order_;
  bool certified_ = true;
  bool fast_ = false;
  std::vector<std::int64_t> fast_w_;
  std::int64_t fast_total_ = 0;
  std::vector<BigInt> big_w_;
  BigInt big_total_;
};

}  // namespace linknav
