#pragma once

#include "linknav/label.hpp"
#include "linknav/linkage.hpp"
#include "linknav/move.hpp"

#include <optional>
#include <string>
#include <vector>

namespace linknav {

inline constexpr std::size_t kConnectedPlanBound = 13;
inline constexpr std::size_t kDisconnectedPlanBound = 7;
inline constexpr std::size_t kTargetOrMirrorBound = 7;
inline constexpr std::size_t kInsideOutBound = 6;
inline constexpr std::size_t kBowBound = 3;

/// A renumbering of the edges; new index i corresponds to old index
/// new_to_old[i-1]. Lengths travel with their indices.
class Relabeling {
 public:
  static Relabeling identity(int n);
  /// Puts the target in cyclic interval form with the longest edge first.
  static Relabeling for_target(const Linkage& L, const Vertex& target);
  explicit Relabeling(std::vector<int> new_to_old);

  const std::vector<int>& new_to_old() const noexcept { return new_to_old_; }
  bool is_identity() const noexcept;
  Linkage apply(const Linkage& L) const { return L.permuted(new_to_old_); }
  CyclicPartition apply(const CyclicPartition& p) const;
  CyclicPartition revert(const CyclicPartition& p) const;

 private:
  std::vector<int> new_to_old_;
  std::vector<int> old_to_new_;
};

class InvalidStepError : public InputError {
 public:
  InvalidStepError(std::size_t index, const std::string& reason)
      : InputError(ErrorCode::InvalidStep, "step " + std::to_string(index) + ": " + reason), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class NoPathError : public PlanningError {
 public:
  NoPathError(std::optional<Orientation> from, std::optional<Orientation> to, const std::string& what)
      : PlanningError(ErrorCode::NoPath, what), from_(from), to_(to) {}
  std::optional<Orientation> from_class() const noexcept { return from_; }
  std::optional<Orientation> to_class() const noexcept { return to_; }

 private:
  std::optional<Orientation> from_, to_;
};

struct PhaseCount {
  std::string name;
  std::size_t steps = 0;
  friend bool operator==(const PhaseCount&, const PhaseCount&) = default;
};

struct TargetOrMirror {
  Path path;
  bool reached_mirror = false;
  Relabeling relabeling = Relabeling::identity(0);
  std::vector<PhaseCount> phases;
};

struct PlanReport {
  Path path;
  bool reached_mirror = false;
  Relabeling relabeling = Relabeling::identity(0);
  std::vector<PhaseCount> phases;
};

/// Re-derives every step with apply_move. Throws InvalidStepError.
void validate_path(const Linkage& L, const Path& p);

/// At most 3 steps between any two vertices of a bow linkage.
Path plan_bow(const Linkage& L, const Vertex& v, const Vertex& target);

/// Path from v to mirror(v), at most 6 steps. Requires a connected moduli
/// space (Disconnected otherwise).
Path turn_inside_out(const Linkage& L, const Vertex& v);

/// At most 7 steps from v to target or to mirror(target).
TargetOrMirror plan_to_target_or_mirror(const Linkage& L, const Vertex& v, const Vertex& target);

/// Validated path from v to target: at most 13 steps when the moduli space is
/// connected, at most 7 within a component otherwise. Throws NoPathError for
/// vertices in different components.
PlanReport plan(const Linkage& L, const Vertex& v, const Vertex& target);

}  // namespace linknav
