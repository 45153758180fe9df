#pragma once

#include <cstddef>
#include <vector>

#include "graphlin/graph.hpp"
#include "graphlin/labels.hpp"

namespace graphlin {

/// Treebank statistics. Plane counts come from the greedy SameDirectionCross
/// assignment of non-root arcs, so "k-planar" means "k planes under our greedy
/// order"; it can exceed the true minimum.
struct CorpusStats {
  std::size_t sentence_count = 0;
  std::size_t token_count = 0;
  std::size_t arc_count = 0;       // root arcs included
  std::size_t root_arc_count = 0;
  std::size_t zero_arc_sentences = 0;  // no non-root arc, left out of the plane ratios
  std::size_t cycle_sentences = 0;
  std::size_t cycle_count = 0;
  /// plane_histogram[j] = sentences needing exactly j+1 planes.
  std::vector<std::size_t> plane_histogram;

  CorpusStats& operator+=(const CorpusStats& other);

  /// Share of sentences with at least one non-root arc that need exactly
  /// `planes` planes.
  double plane_fraction(std::size_t planes) const noexcept;
  /// Heads per token (h/n).
  double avg_in_degree() const noexcept;
  /// Dependants per token (d/n); root arcs have no token head.
  double avg_out_degree() const noexcept;
  double arcs_per_graph() const noexcept;
  double avg_length() const noexcept;
};

CorpusStats sentence_stats(const DepGraph& g);
CorpusStats corpus_stats(const std::vector<DepGraph>& sentences, std::size_t jobs = 1);

struct VocabStats {
  EncodingSpec spec;
  std::size_t structural_labels = 0;
  /// Distinct relation strings in the label channels, NULL excluded.
  std::size_t relations = 0;
};

/// Throws std::logic_error if a bit family ever exceeds its 2^(4k) or 2^(6k)
/// label space.
std::vector<VocabStats> vocab_stats(const std::vector<DepGraph>& sentences,
                                    const std::vector<EncodingSpec>& specs, std::size_t jobs = 1);

}  // namespace graphlin
