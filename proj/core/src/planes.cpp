#include "graphlin/planes.hpp"

#include <tuple>

namespace graphlin {

bool incompatible(IncompatibilityRule rule, const Arc& a, const Arc& b) noexcept {
  if (same_direction_cross(a, b)) return true;
  return rule == IncompatibilityRule::SameDirectionCrossOrSharedDependent && a.dep == b.dep;
}

void canonical_sort(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
    const auto key = [](const Arc& a) {
      return std::make_tuple(a.left(), a.right(), a.direction() == Direction::Leftward, a.head);
    };
    return key(x) < key(y);
  });
}

PlaneAssignment greedy_assign(std::span<const Arc> arcs, PlaneLimit k_max,
                              IncompatibilityRule rule) {
  std::vector<Arc> order(arcs.begin(), arcs.end());
  canonical_sort(order);

  PlaneAssignment result;
  for (Arc& arc : order) {
    bool placed = false;
    for (auto& plane : result.planes) {
      const bool clash = std::any_of(plane.begin(), plane.end(),
                                     [&](const Arc& other) { return incompatible(rule, arc, other); });
      if (!clash) {
        plane.push_back(std::move(arc));
        placed = true;
        break;
      }
    }
    if (placed) continue;
    if (!k_max || result.planes.size() < *k_max) {
      result.planes.push_back({std::move(arc)});
    } else {
      result.overflow.push_back(std::move(arc));
    }
  }
  return result;
}

PlaneAssignment split_in_degree(std::span<const Arc> arcs, PlaneLimit k_max,
                                IncompatibilityRule rule) {
  return greedy_assign(arcs, k_max, rule);
}

std::vector<std::vector<Arc>> add_null_arcs(const PlaneAssignment& assignment, int n,
                                            std::size_t plane_count) {
  std::vector<std::vector<Arc>> planes = assignment.planes;
  if (planes.size() < plane_count) planes.resize(plane_count);
  std::vector<bool> has_parent;
  for (auto& plane : planes) {
    has_parent.assign(static_cast<std::size_t>(n) + 1, false);
    for (const Arc& arc : plane) has_parent[static_cast<std::size_t>(arc.dep)] = true;
    for (int i = 1; i <= n; ++i) {
      if (!has_parent[static_cast<std::size_t>(i)]) {
        plane.push_back(Arc{i - 1, i, "NULL", ArcKind::Null});
      }
    }
    canonical_sort(plane);
  }
  return planes;
}

DirectionPairs assign_direction_pairs(std::span<const Arc> arcs, PlaneLimit k_max) {
  std::vector<Arc> right, left;
  for (const Arc& arc : arcs) {
    (arc.direction() == Direction::Rightward ? right : left).push_back(arc);
  }
  constexpr auto rule = IncompatibilityRule::SameDirectionCrossOrSharedDependent;
  PlaneAssignment r = greedy_assign(right, k_max, rule);
  PlaneAssignment l = greedy_assign(left, k_max, rule);

  DirectionPairs pairs;
  pairs.rightward = std::move(r.planes);
  pairs.leftward = std::move(l.planes);
  pairs.overflow = std::move(r.overflow);
  pairs.overflow.insert(pairs.overflow.end(), l.overflow.begin(), l.overflow.end());
  canonical_sort(pairs.overflow);
  return pairs;
}

DirectionPairs pairs_from_planes(const PlaneAssignment& assignment) {
  DirectionPairs pairs;
  pairs.rightward.resize(assignment.planes.size());
  pairs.leftward.resize(assignment.planes.size());
  for (std::size_t j = 0; j < assignment.planes.size(); ++j) {
    for (const Arc& arc : assignment.planes[j]) {
      (arc.direction() == Direction::Rightward ? pairs.rightward : pairs.leftward)[j].push_back(arc);
    }
  }
  pairs.overflow = assignment.overflow;
  return pairs;
}

PlaneAssignment planes_from_pairs(const DirectionPairs& pairs) {
  PlaneAssignment out;
  out.planes.resize(pairs.pair_count());
  for (std::size_t j = 0; j < out.planes.size(); ++j) {
    auto& plane = out.planes[j];
    if (j < pairs.rightward.size()) plane = pairs.rightward[j];
    if (j < pairs.leftward.size()) {
      plane.insert(plane.end(), pairs.leftward[j].begin(), pairs.leftward[j].end());
    }
    canonical_sort(plane);
  }
  out.overflow = pairs.overflow;
  return out;
}

}  // namespace graphlin
