#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "graphlin/formats.hpp"
#include "graphlin/graph.hpp"

namespace graphlin {

/// Portable random source: mt19937_64 with hand-rolled bounded draws, since the
/// standard distributions differ between library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  /// Uniform double in [0, 1).
  double unit();
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Seed of the i-th sentence in a generated stream (splitmix64 of seed + i).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

struct GraphGenConfig {
  int min_length = 1;
  int max_length = 30;
  /// Upper bound on non-root arcs per token; each graph draws its own density
  /// uniformly in [0, max_density].
  double max_density = 1.2;
  /// Probability that a generated arc points rightward.
  double rightward_bias = 0.5;
  bool allow_cycles = true;
  /// Each token independently gets a root arc with this probability; at least
  /// one root is forced when `force_root` is set.
  double root_probability = 0.05;
  bool force_root = true;
  /// Mean arc length of the geometric length distribution; 0 draws heads
  /// uniformly.
  double mean_arc_length = 0.0;
  std::vector<std::string> relations{"ARG1", "ARG2", "ARG3", "mod", "conj", "compound"};
  std::string root_relation = "root";
};

DepGraph random_graph(Rng& rng, const GraphGenConfig& config, std::string sentence_id = {});

/// Random projective tree over n tokens, rooted at position 0.
DepGraph random_projective_tree(Rng& rng, int n, std::string sentence_id = {});

/// `count` graphs; sentence i uses derive_seed(seed, i), so any prefix of a
/// corpus is the corpus generated with a smaller count.
CorpusDocument generate_corpus(const GraphGenConfig& config, std::size_t count, std::uint64_t seed,
                               SourceFormat format = SourceFormat::ConlluEnhanced);

}  // namespace graphlin
