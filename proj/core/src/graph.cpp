#include "graphlin/graph.hpp"

#include <tuple>

#include "graphlin/errors.hpp"

namespace graphlin {

bool crosses(const Arc& a, const Arc& b) noexcept {
  if (a.left() == b.left()) return false;
  const Arc& first = a.left() < b.left() ? a : b;
  const Arc& second = a.left() < b.left() ? b : a;
  return second.left() < first.right() && first.right() < second.right();
}

bool same_direction_cross(const Arc& a, const Arc& b) noexcept {
  return a.direction() == b.direction() && crosses(a, b);
}

DepGraph::DepGraph(std::vector<Token> tokens, std::vector<Arc> arcs, std::string sentence_id)
    : tokens_(std::move(tokens)), arcs_(std::move(arcs)), sentence_id_(std::move(sentence_id)) {
  const int n = size();
  for (int i = 0; i < n; ++i) {
    if (tokens_[static_cast<std::size_t>(i)].index != i + 1) {
      throw GraphError("token indices must be 1..n in order; found " +
                       std::to_string(tokens_[static_cast<std::size_t>(i)].index) +
                       " at position " + std::to_string(i + 1));
    }
  }
  for (const Arc& arc : arcs_) {
    if (arc.kind != ArcKind::Regular) {
      throw GraphError("dummy and null arcs cannot appear in a dependency graph");
    }
    if (arc.dep < 1 || arc.dep > n || arc.head < 0 || arc.head > n) {
      throw GraphError("arc " + std::to_string(arc.head) + "->" + std::to_string(arc.dep) +
                       " out of range for n=" + std::to_string(n));
    }
    if (arc.head == arc.dep) {
      throw GraphError("self-loop on token " + std::to_string(arc.dep));
    }
  }
  std::sort(arcs_.begin(), arcs_.end(), [](const Arc& x, const Arc& y) {
    return std::tie(x.dep, x.head) < std::tie(y.dep, y.head);
  });
  for (std::size_t i = 1; i < arcs_.size(); ++i) {
    if (arcs_[i].dep == arcs_[i - 1].dep && arcs_[i].head == arcs_[i - 1].head) {
      throw GraphError("duplicate arc " + std::to_string(arcs_[i].head) + "->" +
                       std::to_string(arcs_[i].dep));
    }
  }
  offsets_.assign(static_cast<std::size_t>(n) + 2, arcs_.size());
  for (std::size_t i = arcs_.size(); i-- > 0;) {
    offsets_[static_cast<std::size_t>(arcs_[i].dep)] = i;
  }
  for (std::size_t d = offsets_.size() - 1; d-- > 0;) {
    offsets_[d] = std::min(offsets_[d], offsets_[d + 1]);
  }
}

DepGraph DepGraph::with_length(int n, std::vector<Arc> arcs, std::string sentence_id) {
  std::vector<Token> tokens;
  tokens.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 1; i <= n; ++i) tokens.push_back(Token{i, {}, {}});
  return DepGraph(std::move(tokens), std::move(arcs), std::move(sentence_id));
}

std::span<const Arc> DepGraph::incoming(int dep) const {
  if (dep < 1 || dep > size()) return {};
  const auto begin = offsets_[static_cast<std::size_t>(dep)];
  const auto end = offsets_[static_cast<std::size_t>(dep) + 1];
  return std::span<const Arc>(arcs_).subspan(begin, end - begin);
}

bool DepGraph::has_arc(int head, int dep) const {
  const auto in = incoming(dep);
  return std::any_of(in.begin(), in.end(), [head](const Arc& a) { return a.head == head; });
}

std::vector<Arc> DepGraph::root_arcs() const {
  std::vector<Arc> out;
  std::copy_if(arcs_.begin(), arcs_.end(), std::back_inserter(out),
               [](const Arc& a) { return a.is_root(); });
  return out;
}

std::vector<Arc> DepGraph::non_root_arcs() const {
  std::vector<Arc> out;
  std::copy_if(arcs_.begin(), arcs_.end(), std::back_inserter(out),
               [](const Arc& a) { return !a.is_root(); });
  return out;
}

bool same_arcs(const DepGraph& a, const DepGraph& b) { return a.arcs() == b.arcs(); }

DegreeStats degree_stats(const DepGraph& g, bool include_root_arcs) {
  const auto n = static_cast<std::size_t>(g.size());
  std::vector<std::size_t> in(n + 1, 0), out(n + 1, 0);
  DegreeStats stats;
  stats.token_count = n;
  for (const Arc& arc : g.arcs()) {
    if (arc.is_root() && !include_root_arcs) continue;
    ++stats.arc_count;
    ++in[static_cast<std::size_t>(arc.dep)];
    ++out[static_cast<std::size_t>(arc.head)];
  }
  for (std::size_t i = 1; i <= n; ++i) {
    stats.max_in_degree = std::max(stats.max_in_degree, in[i]);
    stats.max_out_degree = std::max(stats.max_out_degree, out[i]);
    if (in[i] == 0 && out[i] == 0) ++stats.isolated_count;
  }
  return stats;
}

}  // namespace graphlin
