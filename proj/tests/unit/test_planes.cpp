#include <gtest/gtest.h>

#include <algorithm>

#include "graphlin/formats.hpp"
#include "graphlin/generate.hpp"
#include "graphlin/planes.hpp"
#include "oracles.hpp"

using namespace graphlin;

namespace {

Arc arc(int h, int d) { return Arc{h, d, "x"}; }

std::vector<std::pair<int, int>> pairs_of(const std::vector<Arc>& arcs) {
  std::vector<std::pair<int, int>> out;
  for (const Arc& a : arcs) out.emplace_back(a.head, a.dep);
  std::sort(out.begin(), out.end());
  return out;
}

using P = std::vector<std::pair<int, int>>;

// Every pair in every plane respects `rule`, and planes plus overflow hold
// exactly the input arcs.
void audit(const std::vector<Arc>& input, const PlaneAssignment& pa, IncompatibilityRule rule) {
  std::vector<Arc> all = pa.overflow;
  for (const auto& plane : pa.planes) {
    for (std::size_t i = 0; i < plane.size(); ++i) {
      for (std::size_t j = i + 1; j < plane.size(); ++j) {
        ASSERT_FALSE(incompatible(rule, plane[i], plane[j]));
      }
    }
    all.insert(all.end(), plane.begin(), plane.end());
  }
  ASSERT_EQ(pairs_of(all), pairs_of(input));
}

std::vector<DepGraph> population(std::size_t count, int max_length, std::uint64_t seed) {
  GraphGenConfig cfg;
  cfg.max_length = max_length;
  std::vector<DepGraph> out;
  for (std::size_t s = 0; s < count; ++s) {
    Rng rng(derive_seed(seed, s));
    out.push_back(random_graph(rng, cfg));
  }
  return out;
}

}  // namespace

TEST(CanonicalOrder, LeftThenRightThenRightwardFirst) {
  std::vector<Arc> arcs{arc(3, 1), arc(1, 3), arc(2, 1), arc(1, 4), arc(0, 2)};
  canonical_sort(arcs);
  EXPECT_EQ(pairs_of(arcs), (P{{0, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 1}}));
  EXPECT_EQ(arcs[0].head, 0);
  EXPECT_EQ(arcs[1].head, 2);  // (1,2) span
  EXPECT_EQ(arcs[2].head, 1);  // (1,3) rightward
  EXPECT_EQ(arcs[3].head, 3);  // (1,3) leftward
  EXPECT_EQ(arcs[4].dep, 4);
}

TEST(GreedyAssign, CrossingPairSplits) {
  const std::vector<Arc> arcs{arc(1, 4), arc(3, 5)};
  const auto pa = greedy_assign(arcs, 2, IncompatibilityRule::SameDirectionCross);
  ASSERT_EQ(pa.plane_count(), 2u);
  EXPECT_EQ(pairs_of(pa.planes[0]), (P{{1, 4}}));
  EXPECT_EQ(pairs_of(pa.planes[1]), (P{{3, 5}}));
  EXPECT_TRUE(pa.overflow.empty());
}

TEST(GreedyAssign, LimitSendsArcsToOverflow) {
  const std::vector<Arc> arcs{arc(1, 4), arc(3, 5)};
  const auto pa = greedy_assign(arcs, 1, IncompatibilityRule::SameDirectionCross);
  ASSERT_EQ(pa.plane_count(), 1u);
  EXPECT_EQ(pairs_of(pa.planes[0]), (P{{1, 4}}));
  EXPECT_EQ(pairs_of(pa.overflow), (P{{3, 5}}));
}

TEST(GreedyAssign, FixtureNeedsTwoPlanes) {
  const auto arcs = fixture_fig1().non_root_arcs();
  const auto pa = greedy_assign(arcs, std::nullopt, IncompatibilityRule::SameDirectionCross);
  EXPECT_EQ(pa.plane_count(), 2u);
  EXPECT_EQ(oracle::min_planes(arcs, false), 2u);
  audit(arcs, pa, IncompatibilityRule::SameDirectionCross);
}

TEST(GreedyAssign, OppositeDirectionCrossingShareAPlane) {
  const std::vector<Arc> arcs{arc(1, 5), arc(6, 3)};
  EXPECT_EQ(greedy_assign(arcs, 1, IncompatibilityRule::SameDirectionCross).plane_count(), 1u);
}

TEST(GreedyAssign, ProjectiveTreesUseOnePlane) {
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(derive_seed(5, s));
    const auto tree = random_projective_tree(rng, rng.uniform(1, 25));
    const auto pa = greedy_assign(tree.non_root_arcs(), std::nullopt,
                                  IncompatibilityRule::SameDirectionCross);
    ASSERT_LE(pa.plane_count(), 1u) << s;
  }
}

TEST(GreedyAssign, AuditAndMonotoneOverflow) {
  for (const DepGraph& g : population(1500, 25, 21)) {
    const auto arcs = g.non_root_arcs();
    for (auto rule : {IncompatibilityRule::SameDirectionCross,
                      IncompatibilityRule::SameDirectionCrossOrSharedDependent}) {
      std::size_t previous = arcs.size() + 1;
      for (std::size_t k = 1; k <= 5; ++k) {
        const auto pa = greedy_assign(arcs, k, rule);
        audit(arcs, pa, rule);
        ASSERT_LE(pa.overflow.size(), previous);
        previous = pa.overflow.size();
      }
    }
  }
}

TEST(GreedyAssign, NeverBeatsExactMinimum) {
  for (const DepGraph& g : population(1500, 7, 33)) {
    const auto arcs = g.non_root_arcs();
    for (bool shared : {false, true}) {
      const auto rule = shared ? IncompatibilityRule::SameDirectionCrossOrSharedDependent
                               : IncompatibilityRule::SameDirectionCross;
      const auto greedy = greedy_assign(arcs, std::nullopt, rule).plane_count();
      ASSERT_GE(greedy, oracle::min_planes(arcs, shared));
    }
  }
}

TEST(SplitInDegree, SharedDependentForcesSeparatePlanes) {
  const std::vector<Arc> arcs{arc(1, 5), arc(3, 5), arc(4, 5)};
  const auto pa = split_in_degree(arcs, std::nullopt);
  ASSERT_EQ(pa.plane_count(), 3u);
  for (const auto& plane : pa.planes) EXPECT_EQ(plane.size(), 1u);
}

TEST(SplitInDegree, SingleArc) {
  const std::vector<Arc> arcs{arc(2, 1)};
  EXPECT_EQ(split_in_degree(arcs, std::nullopt).plane_count(), 1u);
}

TEST(SplitInDegree, FixtureWithDummyUsesThreePlanes) {
  auto arcs = fixture_fig1().non_root_arcs();
  arcs.push_back(Arc{0, 2, {}, ArcKind::Dummy});
  const auto pa = split_in_degree(arcs, std::nullopt);
  ASSERT_EQ(pa.plane_count(), 3u);
  audit(arcs, pa, IncompatibilityRule::SameDirectionCrossOrSharedDependent);
  EXPECT_EQ(pairs_of(pa.planes[0]), (P{{0, 2}, {2, 1}, {2, 3}, {3, 5}, {5, 6}}));
  EXPECT_EQ(pairs_of(pa.planes[1]), (P{{1, 4}, {1, 5}, {6, 3}}));
  EXPECT_EQ(pairs_of(pa.planes[2]), (P{{4, 5}}));
}

TEST(NullArcs, FillParentlessPositions) {
  PlaneAssignment pa;
  pa.planes = {{Arc{0, 2, {}, ArcKind::Dummy}, arc(2, 1), arc(2, 3), arc(3, 5), arc(5, 6)}};
  const auto planes = add_null_arcs(pa, 6);
  ASSERT_EQ(planes.size(), 1u);
  std::vector<Arc> nulls;
  for (const Arc& a : planes[0]) {
    if (a.kind == ArcKind::Null) nulls.push_back(a);
  }
  ASSERT_EQ(nulls.size(), 1u);
  EXPECT_EQ(nulls[0].head, 3);
  EXPECT_EQ(nulls[0].dep, 4);
  EXPECT_EQ(nulls[0].relation, "NULL");
}

TEST(NullArcs, EmptyPlaneBecomesAChain) {
  const auto planes = add_null_arcs(PlaneAssignment{}, 3, 1);
  ASSERT_EQ(planes.size(), 1u);
  EXPECT_EQ(pairs_of(planes[0]), (P{{0, 1}, {1, 2}, {2, 3}}));
}

TEST(NullArcs, FullPlaneUnchanged) {
  PlaneAssignment pa;
  pa.planes = {{arc(0, 1), arc(1, 2), arc(1, 3)}};
  EXPECT_EQ(pairs_of(add_null_arcs(pa, 3)[0]), (P{{0, 1}, {1, 2}, {1, 3}}));
}

TEST(NullArcs, KeepPlanesValid) {
  for (const DepGraph& g : population(800, 20, 44)) {
    auto arcs = g.non_root_arcs();
    for (int i = 1; i <= g.size(); ++i) {
      if (std::none_of(arcs.begin(), arcs.end(), [i](const Arc& a) { return a.dep == i; })) {
        arcs.push_back(Arc{0, i, {}, ArcKind::Dummy});
      }
    }
    const auto pa = split_in_degree(arcs, 3);
    const auto planes = add_null_arcs(pa, g.size(), 3);
    for (const auto& plane : planes) {
      std::vector<int> in(static_cast<std::size_t>(g.size()) + 1, 0);
      for (const Arc& a : plane) ++in[static_cast<std::size_t>(a.dep)];
      for (int i = 1; i <= g.size(); ++i) ASSERT_EQ(in[static_cast<std::size_t>(i)], 1);
      for (std::size_t a = 0; a < plane.size(); ++a) {
        for (std::size_t b = a + 1; b < plane.size(); ++b) {
          ASSERT_FALSE(same_direction_cross(plane[a], plane[b]));
        }
      }
    }
  }
}

TEST(DirectionPairs, FixtureSplit) {
  const auto pairs = assign_direction_pairs(fixture_fig1().non_root_arcs(), 3);
  EXPECT_TRUE(pairs.overflow.empty());
  ASSERT_EQ(pairs.pair_count(), 3u);
  ASSERT_EQ(pairs.leftward.size(), 1u);
  EXPECT_EQ(pairs_of(pairs.leftward[0]), (P{{2, 1}, {6, 3}}));
  // The canonical order places 1->4 before 3->5, so the rightward planes differ
  // from the hand-drawn split while covering the same arcs.
  EXPECT_EQ(pairs_of(pairs.rightward[0]), (P{{1, 4}, {1, 5}, {2, 3}, {5, 6}}));
  EXPECT_EQ(pairs_of(pairs.rightward[1]), (P{{3, 5}}));
  EXPECT_EQ(pairs_of(pairs.rightward[2]), (P{{4, 5}}));
}

TEST(DirectionPairs, SecondSameSideHeadOverflowsAtKOne) {
  const std::vector<Arc> arcs{arc(3, 1), arc(4, 1)};
  const auto pairs = assign_direction_pairs(arcs, 1);
  EXPECT_EQ(pairs.overflow.size(), 1u);
}

TEST(DirectionPairs, OppositeCrossingArcsShareAPair) {
  const std::vector<Arc> arcs{arc(1, 5), arc(6, 3)};
  const auto pairs = assign_direction_pairs(arcs, 1);
  EXPECT_TRUE(pairs.overflow.empty());
  EXPECT_EQ(pairs.pair_count(), 1u);
}

TEST(DirectionPairs, KPlusOneHeadsAlwaysOverflow) {
  for (int k = 1; k <= 4; ++k) {
    std::vector<Arc> arcs;
    for (int h = 2; h <= k + 2; ++h) arcs.push_back(arc(h, 1));
    EXPECT_EQ(assign_direction_pairs(arcs, static_cast<std::size_t>(k)).overflow.size(), 1u);
  }
}

TEST(DirectionPairs, ConversionsKeepValidity) {
  for (const DepGraph& g : population(800, 20, 55)) {
    const auto arcs = g.non_root_arcs();
    const auto four = split_in_degree(arcs, 3);
    const auto pairs = pairs_from_planes(four);
    for (std::size_t j = 0; j < pairs.pair_count(); ++j) {
      for (const auto* side : {&pairs.rightward, &pairs.leftward}) {
        if (j >= side->size()) continue;
        const auto& plane = (*side)[j];
        for (std::size_t a = 0; a < plane.size(); ++a) {
          for (std::size_t b = a + 1; b < plane.size(); ++b) {
            ASSERT_FALSE(incompatible(IncompatibilityRule::SameDirectionCrossOrSharedDependent,
                                      plane[a], plane[b]));
          }
        }
      }
    }
    const auto joined = planes_from_pairs(pairs);
    audit(arcs, joined, IncompatibilityRule::SameDirectionCross);
  }
}
