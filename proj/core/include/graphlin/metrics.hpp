#pragma once

#include <cstddef>
#include <vector>

#include "graphlin/formats.hpp"
#include "graphlin/graph.hpp"
#include "graphlin/labels.hpp"

namespace graphlin {

/// Additive evaluation counters; sentence results merge with +=.
struct EvalCounts {
  std::size_t gold_arcs = 0;
  std::size_t predicted_arcs = 0;
  std::size_t unlabeled_matches = 0;
  std::size_t labeled_matches = 0;
  std::size_t sentences = 0;
  std::size_t unlabeled_exact = 0;
  std::size_t labeled_exact = 0;
  /// Sums of per-sentence F-scores, for macro averages.
  double unlabeled_f_sum = 0.0;
  double labeled_f_sum = 0.0;

  EvalCounts& operator+=(const EvalCounts& other) noexcept;
};

/// Micro-averaged scores over (head, dep) items, root arcs included as
/// (0, dep). Precision (recall) is 1 when nothing was predicted (expected), so
/// an empty prediction of an empty graph scores F = 1.
struct EvalResult {
  EvalCounts counts;
  double up = 1.0, ur = 1.0, uf = 1.0;
  double lp = 1.0, lr = 1.0, lf = 1.0;
  double um = 1.0, lm = 1.0;
  double macro_uf = 1.0, macro_lf = 1.0;

  static EvalResult from_counts(const EvalCounts& counts) noexcept;
};

/// Harmonic mean, 0 when both components are 0.
double f_score(double precision, double recall) noexcept;

/// Counters for one aligned sentence pair. Throws MisalignmentError when the
/// token counts differ.
EvalCounts count_sentence(const DepGraph& gold, const DepGraph& predicted);

EvalResult evaluate(const std::vector<DepGraph>& gold, const std::vector<DepGraph>& predicted,
                    std::size_t jobs = 1);
EvalResult evaluate(const CorpusDocument& gold, const CorpusDocument& predicted,
                    std::size_t jobs = 1);

struct OracleCoverage {
  EncodingSpec spec;
  /// Gold versus decode(encode(gold)); eval.uf is the OF statistic.
  EvalResult eval;
  CoverageReport coverage;
  /// Sentences whose own encoding needed a repair to decode. Always 0 unless
  /// the encoder is broken.
  std::size_t repaired_sentences = 0;
};

OracleCoverage oracle_coverage(const std::vector<DepGraph>& sentences, const EncodingSpec& spec,
                               std::size_t jobs = 1);
OracleCoverage oracle_coverage(const CorpusDocument& doc, const EncodingSpec& spec,
                               std::size_t jobs = 1);

}  // namespace graphlin
