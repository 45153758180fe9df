#include <benchmark/benchmark.h>

#include <map>

#include "graphlin/encoding.hpp"
#include "graphlin/formats.hpp"
#include "graphlin/generate.hpp"
#include "graphlin/metrics.hpp"
#include "graphlin/planes.hpp"

using namespace graphlin;

namespace {

const std::vector<DepGraph>& corpus(int length) {
  static std::map<int, std::vector<DepGraph>> cache;
  auto& v = cache[length];
  if (v.empty()) {
    GraphGenConfig cfg;
    cfg.min_length = cfg.max_length = length;
    v = generate_corpus(cfg, 512, 17).sentences;
  }
  return v;
}

const char* kSpecs[] = {"abs", "rel", "b:2", "b:3", "b4:3", "b6:3"};

void BM_Encode(benchmark::State& state) {
  const auto spec = EncodingSpec::parse(kSpecs[state.range(0)]);
  const auto& graphs = corpus(static_cast<int>(state.range(1)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(encode(graphs[i++ % graphs.size()], spec));
  }
  state.SetLabel(spec.to_string());
  state.SetItemsProcessed(state.iterations());
}

void BM_Decode(benchmark::State& state) {
  const auto spec = EncodingSpec::parse(kSpecs[state.range(0)]);
  std::vector<LabelSeq> labels;
  for (const auto& g : corpus(static_cast<int>(state.range(1)))) labels.push_back(encode(g, spec));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode(labels[i++ % labels.size()], spec));
  }
  state.SetLabel(spec.to_string());
  state.SetItemsProcessed(state.iterations());
}

void BM_GreedyPlanes(benchmark::State& state) {
  const auto& graphs = corpus(static_cast<int>(state.range(0)));
  std::vector<std::vector<Arc>> arcs;
  for (const auto& g : graphs) arcs.push_back(g.non_root_arcs());
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        greedy_assign(arcs[i++ % arcs.size()], std::nullopt, IncompatibilityRule::SameDirectionCross));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_OracleCoverage(benchmark::State& state) {
  const auto& graphs = corpus(20);
  const auto spec = EncodingSpec::parse("b6:3");
  for (auto _ : state) benchmark::DoNotOptimize(oracle_coverage(graphs, spec));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graphs.size()));
}

void lengths(benchmark::internal::Benchmark* b) {
  for (int s = 0; s < 6; ++s) {
    for (int n : {10, 20, 40}) b->Args({s, n});
  }
}

}  // namespace

BENCHMARK(BM_Encode)->Apply(lengths);
BENCHMARK(BM_Decode)->Apply(lengths);
BENCHMARK(BM_GreedyPlanes)->Arg(10)->Arg(20)->Arg(40)->Arg(80);
BENCHMARK(BM_OracleCoverage);

BENCHMARK_MAIN();
