#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace graphlin {

/// Position 0 is the virtual root (or the dummy node of the bit encodings).
inline constexpr int kRootPosition = 0;

enum class ArcKind : std::uint8_t { Regular, Dummy, Null };

enum class Direction : std::uint8_t { Rightward, Leftward };

struct Token {
  int index = 0;
  std::string form;
  /// Pass-through columns (lemma, POS, frame, ...), keyed by column name.
  std::map<std::string, std::string> extra;

  bool operator==(const Token&) const = default;
};

struct Arc {
  int head = 0;
  int dep = 0;
  std::string relation;
  ArcKind kind = ArcKind::Regular;

  int left() const noexcept { return std::min(head, dep); }
  int right() const noexcept { return std::max(head, dep); }
  /// Root arcs (head 0) count as rightward.
  Direction direction() const noexcept {
    return head < dep ? Direction::Rightward : Direction::Leftward;
  }
  bool is_root() const noexcept { return head == kRootPosition; }

  bool operator==(const Arc&) const = default;
};

/// Strict interleaving of spans. Arcs sharing their left endpoint never cross.
bool crosses(const Arc& a, const Arc& b) noexcept;

bool same_direction_cross(const Arc& a, const Arc& b) noexcept;

/// A sentence plus a simple directed labeled graph over positions 0..n.
///
/// Immutable once built. The constructor validates every invariant and throws
/// GraphError on violation: token indices must be 1..n in order, arc endpoints
/// must lie in 0..n with dep >= 1 and head != dep, (head, dep) pairs must be
/// unique and only Regular arcs are accepted. Reentrancy, cycles and isolated
/// tokens are all allowed. Arcs are stored sorted by (dep, head).
class DepGraph {
 public:
  DepGraph() = default;
  DepGraph(std::vector<Token> tokens, std::vector<Arc> arcs, std::string sentence_id = {});

  /// Graph over n tokens with empty forms; handy for tests and synthetic data.
  static DepGraph with_length(int n, std::vector<Arc> arcs, std::string sentence_id = {});

  int size() const noexcept { return static_cast<int>(tokens_.size()); }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }
  const Token& token(int index) const { return tokens_.at(static_cast<std::size_t>(index - 1)); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const std::string& sentence_id() const noexcept { return sentence_id_; }

  /// Arcs entering `dep`, sorted by head position.
  std::span<const Arc> incoming(int dep) const;
  bool has_arc(int head, int dep) const;
  std::vector<Arc> root_arcs() const;
  std::vector<Arc> non_root_arcs() const;

  bool operator==(const DepGraph&) const = default;

 private:
  std::vector<Token> tokens_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> offsets_;  // offsets_[d] = first arc with dep d
  std::string sentence_id_;
};

/// Labeled arc-set equality, ignoring tokens and sentence ids.
bool same_arcs(const DepGraph& a, const DepGraph& b);

/// Directed cycle over positions 1..n; root arcs are ignored.
bool has_cycle(const DepGraph& g);

/// Number of strongly connected components of size >= 2 (root arcs ignored).
/// Self-loops cannot occur, so this is the count of nontrivial SCCs.
std::size_t cycle_count(const DepGraph& g);

struct DegreeStats {
  std::size_t max_in_degree = 0;
  std::size_t max_out_degree = 0;
  std::size_t arc_count = 0;
  std::size_t token_count = 0;
  /// Tokens with no incident arc at all.
  std::size_t isolated_count = 0;

  double arcs_per_token() const noexcept {
    return token_count == 0 ? 0.0
                            : static_cast<double>(arc_count) / static_cast<double>(token_count);
  }
};

DegreeStats degree_stats(const DepGraph& g, bool include_root_arcs = true);

}  // namespace graphlin
