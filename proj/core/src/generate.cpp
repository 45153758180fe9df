#include "graphlin/generate.hpp"

#include <cmath>
#include <set>

namespace graphlin {
namespace {

bool reaches(const std::vector<std::vector<int>>& out, int from, int to) {
  std::vector<char> seen(out.size(), 0);
  std::vector<int> stack{from};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    if (seen[static_cast<std::size_t>(v)]) continue;
    seen[static_cast<std::size_t>(v)] = 1;
    for (int w : out[static_cast<std::size_t>(v)]) stack.push_back(w);
  }
  return false;
}

int draw_length(Rng& rng, double mean, int limit) {
  if (limit <= 0) return 0;
  if (mean <= 0.0) return rng.uniform(1, limit);
  // Geometric on 1, 2, ... with the requested mean, truncated to the limit.
  if (mean <= 1.0) return 1;
  const double q = std::log1p(-1.0 / mean);
  const double len = 1.0 + std::floor(std::log1p(-rng.unit()) / q);
  return len >= limit ? limit : static_cast<int>(len);
}

void build_tree(Rng& rng, int lo, int hi, int parent, std::vector<Arc>& arcs) {
  if (lo > hi) return;
  const int m = rng.uniform(lo, hi);
  arcs.push_back(Arc{parent, m, parent == kRootPosition ? "root" : "dep"});
  build_tree(rng, lo, m - 1, m, arcs);
  build_tree(rng, m + 1, hi, m, arcs);
}

}  // namespace

int Rng::uniform(int lo, int hi) {
  const auto range = static_cast<std::uint64_t>(static_cast<std::int64_t>(hi) - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<int>(x % range);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

DepGraph random_graph(Rng& rng, const GraphGenConfig& config, std::string sentence_id) {
  const int n = rng.uniform(std::max(1, config.min_length), std::max(1, config.max_length));
  const double density = rng.unit() * config.max_density;
  const int target = static_cast<int>(std::floor(density * n));
  const auto relation = [&] {
    if (config.relations.empty()) return std::string("_");
    return config.relations[static_cast<std::size_t>(
        rng.uniform(0, static_cast<int>(config.relations.size()) - 1))];
  };

  std::vector<Arc> arcs;
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) {
    if (rng.chance(config.root_probability)) {
      arcs.push_back(Arc{kRootPosition, i, config.root_relation});
      used.emplace(kRootPosition, i);
    }
  }
  if (config.force_root && used.empty()) {
    const int r = rng.uniform(1, n);
    arcs.push_back(Arc{kRootPosition, r, config.root_relation});
    used.emplace(kRootPosition, r);
  }

  const int attempts = 4 * target + 8;
  int placed = 0;
  for (int a = 0; a < attempts && placed < target && n > 1; ++a) {
    const int dep = rng.uniform(1, n);
    const bool rightward = rng.chance(config.rightward_bias);
    const int room = rightward ? dep - 1 : n - dep;
    if (room == 0) continue;
    const int len = draw_length(rng, config.mean_arc_length, room);
    const int head = rightward ? dep - len : dep + len;
    if (!used.emplace(head, dep).second) continue;
    if (!config.allow_cycles && reaches(out, dep, head)) {
      used.erase({head, dep});
      continue;
    }
    out[static_cast<std::size_t>(head)].push_back(dep);
    arcs.push_back(Arc{head, dep, relation()});
    ++placed;
  }

  std::vector<Token> tokens;
  tokens.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) tokens.push_back(Token{i, "t" + std::to_string(i), {}});
  return DepGraph(std::move(tokens), std::move(arcs), std::move(sentence_id));
}

DepGraph random_projective_tree(Rng& rng, int n, std::string sentence_id) {
  std::vector<Arc> arcs;
  build_tree(rng, 1, n, kRootPosition, arcs);
  std::vector<Token> tokens;
  for (int i = 1; i <= n; ++i) tokens.push_back(Token{i, "t" + std::to_string(i), {}});
  return DepGraph(std::move(tokens), std::move(arcs), std::move(sentence_id));
}

CorpusDocument generate_corpus(const GraphGenConfig& config, std::size_t count, std::uint64_t seed,
                               SourceFormat format) {
  CorpusDocument doc;
  doc.source_format = format;
  if (format == SourceFormat::Sdp) doc.header.push_back("#SDP 2015");
  GraphGenConfig effective = config;
  if (format == SourceFormat::Sdp) effective.root_relation = "TOP";
  doc.sentences.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng(derive_seed(seed, i));
    doc.sentences.push_back(random_graph(rng, effective, "gen-" + std::to_string(i + 1)));
  }
  return doc;
}

}  // namespace graphlin
