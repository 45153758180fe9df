#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "graphlin/graph.hpp"

namespace graphlin {

enum class IncompatibilityRule : std::uint8_t {
  SameDirectionCross,
  SameDirectionCrossOrSharedDependent,
};

/// True when `a` and `b` may not share a plane under `rule`.
bool incompatible(IncompatibilityRule rule, const Arc& a, const Arc& b) noexcept;

/// Maximum number of planes; std::nullopt means unbounded.
using PlaneLimit = std::optional<std::size_t>;

struct PlaneAssignment {
  /// planes[j] holds the arcs of plane j+1, in canonical order.
  std::vector<std::vector<Arc>> planes;
  /// Arcs that fit in no plane within the limit.
  std::vector<Arc> overflow;

  std::size_t plane_count() const noexcept { return planes.size(); }
};

/// Canonical traversal order used by every plane assignment:
/// (left endpoint, right endpoint, rightward first, head).
void canonical_sort(std::vector<Arc>& arcs);

/// Greedy assignment: each arc, in canonical order, goes to the lowest plane
/// whose arcs are all compatible with it; a new plane is opened while the limit
/// allows, otherwise the arc overflows.
PlaneAssignment greedy_assign(std::span<const Arc> arcs, PlaneLimit k_max,
                              IncompatibilityRule rule);

/// Pre-pass of the 4k-bit encoding: planes with in-degree <= 1 and no
/// same-direction crossings. Dummy arcs from position 0 compete like any other
/// rightward arc.
PlaneAssignment split_in_degree(
    std::span<const Arc> arcs, PlaneLimit k_max,
    IncompatibilityRule rule = IncompatibilityRule::SameDirectionCrossOrSharedDependent);

/// Gives every position 1..n without a parent in a plane a Null arc from the
/// previous position (head 0 for position 1). `plane_count` pads the result
/// with empty planes up to that many planes.
std::vector<std::vector<Arc>> add_null_arcs(const PlaneAssignment& assignment, int n,
                                            std::size_t plane_count = 0);

struct DirectionPairs {
  /// rightward[j] / leftward[j] form subgraph pair j+1.
  std::vector<std::vector<Arc>> rightward;
  std::vector<std::vector<Arc>> leftward;
  std::vector<Arc> overflow;

  std::size_t pair_count() const noexcept { return std::max(rightward.size(), leftward.size()); }
};

/// Pre-pass of the 6k-bit encoding: rightward and leftward arcs are assigned
/// independently, each under SameDirectionCrossOrSharedDependent.
DirectionPairs assign_direction_pairs(std::span<const Arc> arcs, PlaneLimit k_max);

/// Splits every plane of a split_in_degree assignment by direction. Each half
/// keeps in-degree <= 1 and has no crossings, so the result is a valid set of
/// subgraph pairs covering the same arcs.
DirectionPairs pairs_from_planes(const PlaneAssignment& assignment);

/// Joins each subgraph pair into one plane. Only same-direction arcs can
/// conflict under SameDirectionCross, so the joined planes are valid.
PlaneAssignment planes_from_pairs(const DirectionPairs& pairs);

}  // namespace graphlin
