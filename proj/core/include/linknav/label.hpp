#pragma once

#include "linknav/index_set.hpp"
#include "linknav/linkage.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace linknav {

/// A cyclically ordered partition of {1..n} into nonempty parts.
///
/// Always stored in canonical rotation: the part containing index 1 comes
/// first. Reflection is not quotiented, so (A,B,C) and (A,C,B) differ.
class CyclicPartition {
 public:
  CyclicPartition() = default;

  /// Validates that `parts` partition {1..n} for n = the largest index, then
  /// rotates to canonical form. Throws InputError(NotAPartition).
  explicit CyclicPartition(std::vector<IndexSet> parts);
  CyclicPartition(std::initializer_list<IndexSet> parts)
      : CyclicPartition(std::vector<IndexSet>(parts)) {}

  std::size_t size() const noexcept { return parts_.size(); }
  const IndexSet& operator[](std::size_t i) const { return parts_[i]; }
  /// Part at cyclic position i (taken mod size()).
  const IndexSet& at_cyclic(long i) const;
  std::span<const IndexSet> parts() const noexcept { return parts_; }
  int n() const noexcept { return n_; }
  /// Position of the part containing `index`, or -1.
  int part_of(int index) const noexcept;
  /// Number of cells dimension: size() - 3.
  int dimension() const noexcept { return static_cast<int>(parts_.size()) - 3; }

  bool is_admissible(const Linkage& L) const;

  /// "({1,4,7},{2,5},{3,6})"
  std::string to_string() const;

  friend bool operator==(const CyclicPartition&, const CyclicPartition&) = default;
  friend std::strong_ordering operator<=>(const CyclicPartition& a, const CyclicPartition& b) {
    return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                  b.parts_.begin(), b.parts_.end());
  }

 private:
  struct Trusted {};
  CyclicPartition(std::vector<IndexSet> parts, int n, Trusted);
  friend CyclicPartition canonical_unchecked(std::vector<IndexSet> parts, int n);

  std::vector<IndexSet> parts_;
  int n_ = 0;
};

using Vertex = CyclicPartition;
using EdgeLabel = CyclicPartition;

/// Rotates a known-valid partition of {1..n} to canonical form without the
/// partition check. For hot loops that build labels from valid pieces.
CyclicPartition canonical_unchecked(std::vector<IndexSet> parts, int n);

CyclicPartition canonicalize(std::vector<IndexSet> parts);
CyclicPartition mirror(const CyclicPartition& p);

/// True iff every part of `coarse` is a union of cyclically consecutive parts
/// of `fine`, with matching cyclic order.
bool refines(const CyclicPartition& fine, const CyclicPartition& coarse);

enum class Orientation { Positive = 1, Negative = -1 };

/// For disconnected moduli spaces, the cyclic orientation of the parts
/// holding the three longest edges. std::nullopt when the space is connected.
std::optional<Orientation> orientation_class(const Linkage& L, const CyclicPartition& p);

/// Throws InputError unless p is an admissible label with `parts` parts of a
/// partition of {1..L.size()}.
void require_admissible(const Linkage& L, const CyclicPartition& p, std::size_t parts, ErrorCode code);

}  // namespace linknav
