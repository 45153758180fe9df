#include "graphlin/metrics.hpp"

#include <string>

#include "graphlin/encoding.hpp"
#include "graphlin/errors.hpp"
#include "graphlin/parallel.hpp"

namespace graphlin {
namespace {

double ratio(std::size_t num, std::size_t den) noexcept {
  return den == 0 ? 1.0 : static_cast<double>(num) / static_cast<double>(den);
}

EvalCounts reduce(const std::vector<EvalCounts>& parts) {
  EvalCounts total;
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

EvalCounts& EvalCounts::operator+=(const EvalCounts& other) noexcept {
  gold_arcs += other.gold_arcs;
  predicted_arcs += other.predicted_arcs;
  unlabeled_matches += other.unlabeled_matches;
  labeled_matches += other.labeled_matches;
  sentences += other.sentences;
  unlabeled_exact += other.unlabeled_exact;
  labeled_exact += other.labeled_exact;
  unlabeled_f_sum += other.unlabeled_f_sum;
  labeled_f_sum += other.labeled_f_sum;
  return *this;
}

double f_score(double precision, double recall) noexcept {
  const double sum = precision + recall;
  return sum == 0.0 ? 0.0 : 2.0 * precision * recall / sum;
}

EvalResult EvalResult::from_counts(const EvalCounts& c) noexcept {
  EvalResult r;
  r.counts = c;
  r.up = ratio(c.unlabeled_matches, c.predicted_arcs);
  r.ur = ratio(c.unlabeled_matches, c.gold_arcs);
  r.uf = f_score(r.up, r.ur);
  r.lp = ratio(c.labeled_matches, c.predicted_arcs);
  r.lr = ratio(c.labeled_matches, c.gold_arcs);
  r.lf = f_score(r.lp, r.lr);
  r.um = ratio(c.unlabeled_exact, c.sentences);
  r.lm = ratio(c.labeled_exact, c.sentences);
  if (c.sentences > 0) {
    r.macro_uf = c.unlabeled_f_sum / static_cast<double>(c.sentences);
    r.macro_lf = c.labeled_f_sum / static_cast<double>(c.sentences);
  }
  return r;
}

EvalCounts count_sentence(const DepGraph& gold, const DepGraph& predicted) {
  if (gold.size() != predicted.size()) {
    throw MisalignmentError("sentence '" + gold.sentence_id() + "': gold has " +
                            std::to_string(gold.size()) + " tokens, prediction has " +
                            std::to_string(predicted.size()));
  }
  EvalCounts c;
  c.sentences = 1;
  c.gold_arcs = gold.arcs().size();
  c.predicted_arcs = predicted.arcs().size();
  // Both arc lists are sorted by (dep, head) and free of duplicates.
  const auto& g = gold.arcs();
  const auto& p = predicted.arcs();
  std::size_t i = 0, j = 0;
  while (i < g.size() && j < p.size()) {
    const auto gk = std::pair(g[i].dep, g[i].head);
    const auto pk = std::pair(p[j].dep, p[j].head);
    if (gk < pk) {
      ++i;
    } else if (pk < gk) {
      ++j;
    } else {
      ++c.unlabeled_matches;
      if (g[i].relation == p[j].relation) ++c.labeled_matches;
      ++i;
      ++j;
    }
  }
  const bool same_size = c.gold_arcs == c.predicted_arcs;
  c.unlabeled_exact = same_size && c.unlabeled_matches == c.gold_arcs;
  c.labeled_exact = same_size && c.labeled_matches == c.gold_arcs;
  const EvalResult r = EvalResult::from_counts(c);
  c.unlabeled_f_sum = r.uf;
  c.labeled_f_sum = r.lf;
  return c;
}

EvalResult evaluate(const std::vector<DepGraph>& gold, const std::vector<DepGraph>& predicted,
                    std::size_t jobs) {
  if (gold.size() != predicted.size()) {
    throw MisalignmentError("gold has " + std::to_string(gold.size()) +
                            " sentences, prediction has " + std::to_string(predicted.size()));
  }
  const auto parts = parallel_map(gold.size(), jobs, [&](std::size_t s) {
    return count_sentence(gold[s], predicted[s]);
  });
  return EvalResult::from_counts(reduce(parts));
}

EvalResult evaluate(const CorpusDocument& gold, const CorpusDocument& predicted,
                    std::size_t jobs) {
  return evaluate(gold.sentences, predicted.sentences, jobs);
}

OracleCoverage oracle_coverage(const std::vector<DepGraph>& sentences, const EncodingSpec& spec,
                               std::size_t jobs) {
  struct Part {
    EvalCounts counts;
    CoverageReport coverage;
    bool repaired = false;
  };
  const auto parts = parallel_map(sentences.size(), jobs, [&](std::size_t s) {
    const LabelSeq labels = encode(sentences[s], spec);
    const DecodeResult decoded = decode_with_repairs(labels, spec);
    return Part{count_sentence(sentences[s], decoded.graph), labels.coverage,
                !decoded.well_formed()};
  });
  OracleCoverage out;
  out.spec = spec;
  EvalCounts total;
  for (const Part& p : parts) {
    total += p.counts;
    out.coverage += p.coverage;
    out.repaired_sentences += p.repaired ? 1 : 0;
  }
  out.eval = EvalResult::from_counts(total);
  return out;
}

OracleCoverage oracle_coverage(const CorpusDocument& doc, const EncodingSpec& spec,
                               std::size_t jobs) {
  return oracle_coverage(doc.sentences, spec, jobs);
}

}  // namespace graphlin
