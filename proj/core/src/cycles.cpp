#include <vector>

#include "graphlin/graph.hpp"

namespace graphlin {
namespace {

// Iterative Tarjan over positions 1..n. Returns the size of every SCC.
std::vector<std::size_t> component_sizes(const DepGraph& g) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::vector<int>> succ(n + 1);
  for (const Arc& arc : g.arcs()) {
    if (!arc.is_root()) succ[static_cast<std::size_t>(arc.head)].push_back(arc.dep);
  }

  constexpr int kUnvisited = -1;
  std::vector<int> index(n + 1, kUnvisited), low(n + 1, 0);
  std::vector<bool> on_stack(n + 1, false);
  std::vector<int> stack;
  std::vector<std::pair<int, std::size_t>> frames;  // (node, next successor)
  std::vector<std::size_t> sizes;
  int counter = 0;

  for (int start = 1; start <= static_cast<int>(n); ++start) {
    if (index[static_cast<std::size_t>(start)] != kUnvisited) continue;
    frames.emplace_back(start, 0);
    while (!frames.empty()) {
      auto& [v, next] = frames.back();
      const auto vu = static_cast<std::size_t>(v);
      if (next == 0 && index[vu] == kUnvisited) {
        index[vu] = low[vu] = counter++;
        stack.push_back(v);
        on_stack[vu] = true;
      }
      if (next < succ[vu].size()) {
        const int w = succ[vu][next++];
        const auto wu = static_cast<std::size_t>(w);
        if (index[wu] == kUnvisited) {
          frames.emplace_back(w, 0);
        } else if (on_stack[wu]) {
          low[vu] = std::min(low[vu], index[wu]);
        }
        continue;
      }
      if (low[vu] == index[vu]) {
        std::size_t size = 0;
        int w = 0;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = false;
          ++size;
        } while (w != v);
        sizes.push_back(size);
      }
      const int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        const auto parent = static_cast<std::size_t>(frames.back().first);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }
  return sizes;
}

}  // namespace

std::size_t cycle_count(const DepGraph& g) {
  std::size_t count = 0;
  for (std::size_t size : component_sizes(g)) {
    if (size >= 2) ++count;
  }
  return count;
}

bool has_cycle(const DepGraph& g) { return cycle_count(g) > 0; }

}  // namespace graphlin
