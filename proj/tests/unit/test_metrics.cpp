#include <gtest/gtest.h>

#include "graphlin/errors.hpp"
#include "graphlin/formats.hpp"
#include "graphlin/generate.hpp"
#include "graphlin/metrics.hpp"
#include "oracles.hpp"

using namespace graphlin;

namespace {

DepGraph graph(int n, std::vector<Arc> arcs) { return DepGraph::with_length(n, std::move(arcs)); }

std::vector<DepGraph> corpus(std::size_t count, std::uint64_t seed) {
  GraphGenConfig cfg;
  cfg.max_length = 15;
  return generate_corpus(cfg, count, seed).sentences;
}

// Relabels and drops arcs at random to build a noisy prediction.
DepGraph perturb(const DepGraph& g, Rng& rng) {
  std::vector<Arc> arcs;
  for (Arc a : g.arcs()) {
    if (rng.chance(0.2)) continue;
    if (rng.chance(0.2)) a.relation = "other";
    arcs.push_back(a);
  }
  if (g.size() >= 2 && rng.chance(0.5)) {
    const int d = rng.uniform(1, g.size());
    const int h = d == 1 ? 2 : 1;
    if (!g.has_arc(h, d)) arcs.push_back(Arc{h, d, "new"});
  }
  return DepGraph(g.tokens(), std::move(arcs), g.sentence_id());
}

}  // namespace

TEST(Evaluate, IdentityScoresOne) {
  const auto gold = corpus(50, 1);
  const auto r = evaluate(gold, gold);
  EXPECT_DOUBLE_EQ(r.uf, 1.0);
  EXPECT_DOUBLE_EQ(r.lf, 1.0);
  EXPECT_DOUBLE_EQ(r.um, 1.0);
  EXPECT_DOUBLE_EQ(r.lm, 1.0);
}

TEST(Evaluate, EmptyPredictionScoresZero) {
  const std::vector<DepGraph> gold{graph(3, {{1, 2, "a"}})};
  const std::vector<DepGraph> pred{graph(3, {})};
  const auto r = evaluate(gold, pred);
  EXPECT_DOUBLE_EQ(r.uf, 0.0);
  EXPECT_DOUBLE_EQ(r.ur, 0.0);
  EXPECT_DOUBLE_EQ(r.um, 0.0);
}

TEST(Evaluate, HalfOverlap) {
  const std::vector<DepGraph> gold{graph(3, {{1, 2, "a"}, {1, 3, "a"}})};
  const std::vector<DepGraph> pred{graph(3, {{1, 2, "a"}, {2, 3, "a"}})};
  const auto r = evaluate(gold, pred);
  EXPECT_DOUBLE_EQ(r.up, 0.5);
  EXPECT_DOUBLE_EQ(r.ur, 0.5);
  EXPECT_DOUBLE_EQ(r.uf, 0.5);
}

TEST(Evaluate, EmptyAgainstEmptyIsPerfect) {
  const std::vector<DepGraph> g{graph(2, {})};
  const auto r = evaluate(g, g);
  EXPECT_DOUBLE_EQ(r.uf, 1.0);
  EXPECT_DOUBLE_EQ(r.macro_uf, 1.0);
}

TEST(Evaluate, LabelsAndRootArcsCount) {
  const std::vector<DepGraph> gold{graph(2, {{0, 1, "root"}, {1, 2, "a"}})};
  const std::vector<DepGraph> pred{graph(2, {{0, 1, "root"}, {1, 2, "b"}})};
  const auto r = evaluate(gold, pred);
  EXPECT_DOUBLE_EQ(r.uf, 1.0);
  EXPECT_DOUBLE_EQ(r.lf, 0.5);
  EXPECT_DOUBLE_EQ(r.um, 1.0);
  EXPECT_DOUBLE_EQ(r.lm, 0.0);
}

TEST(Evaluate, MisalignedInputs) {
  EXPECT_THROW(evaluate(std::vector<DepGraph>{graph(2, {})}, std::vector<DepGraph>{}),
               MisalignmentError);
  EXPECT_THROW(evaluate(std::vector<DepGraph>{graph(2, {})}, std::vector<DepGraph>{graph(3, {})}),
               MisalignmentError);
}

TEST(Evaluate, AgreesWithSetOracleAndSwapsPrecisionAndRecall) {
  const auto gold = corpus(400, 2);
  std::vector<DepGraph> pred;
  Rng rng(99);
  for (const auto& g : gold) pred.push_back(perturb(g, rng));
  oracle::Score total;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto s = oracle::score(gold[i], pred[i]);
    total.gold += s.gold;
    total.pred += s.pred;
    total.unlabeled += s.unlabeled;
    total.labeled += s.labeled;
  }
  const auto r = evaluate(gold, pred, 3);
  EXPECT_EQ(r.counts.gold_arcs, total.gold);
  EXPECT_EQ(r.counts.predicted_arcs, total.pred);
  EXPECT_EQ(r.counts.unlabeled_matches, total.unlabeled);
  EXPECT_EQ(r.counts.labeled_matches, total.labeled);
  const double p = static_cast<double>(total.unlabeled) / static_cast<double>(total.pred);
  const double rc = static_cast<double>(total.unlabeled) / static_cast<double>(total.gold);
  EXPECT_NEAR(r.uf, 2 * p * rc / (p + rc), 1e-12);
  EXPECT_GE(r.uf, r.lf);
  EXPECT_GE(r.um, r.lm);

  const auto swapped = evaluate(pred, gold);
  EXPECT_DOUBLE_EQ(swapped.up, r.ur);
  EXPECT_DOUBLE_EQ(swapped.lr, r.lp);
}

TEST(OracleCoverage, PositionalIsComplete) {
  const auto docs = corpus(300, 3);
  for (auto s : {"abs", "rel"}) {
    const auto oc = oracle_coverage(docs, EncodingSpec::parse(s));
    EXPECT_DOUBLE_EQ(oc.eval.uf, 1.0) << s;
    EXPECT_DOUBLE_EQ(oc.eval.lf, 1.0) << s;
    EXPECT_EQ(oc.coverage.dropped_arcs, 0u);
  }
}

TEST(OracleCoverage, TreesUnderOneBitSubgraph) {
  std::vector<DepGraph> trees;
  for (std::uint64_t s = 0; s < 200; ++s) {
    Rng rng(derive_seed(4, s));
    trees.push_back(random_projective_tree(rng, rng.uniform(1, 20)));
  }
  EXPECT_DOUBLE_EQ(oracle_coverage(trees, EncodingSpec::parse("b4:1")).eval.uf, 1.0);
}

TEST(OracleCoverage, OneCrossingArcLostAtOnePlane) {
  const std::vector<DepGraph> g{graph(5, {{1, 4, "a"}, {3, 5, "a"}})};
  const auto oc = oracle_coverage(g, EncodingSpec::parse("b:1"));
  EXPECT_DOUBLE_EQ(oc.eval.up, 1.0);
  EXPECT_DOUBLE_EQ(oc.eval.ur, 0.5);
  EXPECT_NEAR(oc.eval.uf, 2.0 / 3.0, 1e-12);
  EXPECT_EQ(oc.coverage.dropped_arcs, 1u);
  EXPECT_EQ(oc.repaired_sentences, 0u);
}

TEST(OracleCoverage, MonotoneInK) {
  const auto docs = corpus(500, 5);
  for (auto family : {Family::Bracket, Family::Bits4, Family::Bits6}) {
    double previous = 0.0;
    for (int k = 1; k <= 4; ++k) {
      const double of = oracle_coverage(docs, EncodingSpec{family, k}).eval.uf;
      EXPECT_GE(of, previous);
      previous = of;
    }
  }
}

TEST(OracleCoverage, JobsDoNotChangeResults) {
  const auto docs = corpus(300, 6);
  const auto one = oracle_coverage(docs, EncodingSpec::parse("b6:2"), 1);
  const auto four = oracle_coverage(docs, EncodingSpec::parse("b6:2"), 4);
  EXPECT_EQ(one.eval.uf, four.eval.uf);
  EXPECT_EQ(one.coverage, four.coverage);
}
