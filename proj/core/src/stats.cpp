#include "graphlin/stats.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "graphlin/encoding.hpp"
#include "graphlin/parallel.hpp"
#include "graphlin/planes.hpp"

namespace graphlin {
namespace {

double per(std::size_t num, std::size_t den) noexcept {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

// Label-space size of a bit family, or 0 when unbounded or too large to matter.
std::size_t label_space(const EncodingSpec& spec) noexcept {
  int bits = 0;
  if (spec.family == Family::Bits4) bits = 4 * spec.k;
  if (spec.family == Family::Bits6) bits = 6 * spec.k;
  if (bits == 0 || bits >= 63) return 0;
  return std::size_t{1} << bits;
}

}  // namespace

CorpusStats& CorpusStats::operator+=(const CorpusStats& o) {
  sentence_count += o.sentence_count;
  token_count += o.token_count;
  arc_count += o.arc_count;
  root_arc_count += o.root_arc_count;
  zero_arc_sentences += o.zero_arc_sentences;
  cycle_sentences += o.cycle_sentences;
  cycle_count += o.cycle_count;
  if (plane_histogram.size() < o.plane_histogram.size()) {
    plane_histogram.resize(o.plane_histogram.size(), 0);
  }
  for (std::size_t j = 0; j < o.plane_histogram.size(); ++j) plane_histogram[j] += o.plane_histogram[j];
  return *this;
}

double CorpusStats::plane_fraction(std::size_t planes) const noexcept {
  if (planes == 0 || planes > plane_histogram.size()) return 0.0;
  return per(plane_histogram[planes - 1], sentence_count - zero_arc_sentences);
}

double CorpusStats::avg_in_degree() const noexcept { return per(arc_count, token_count); }

double CorpusStats::avg_out_degree() const noexcept {
  return per(arc_count - root_arc_count, token_count);
}

double CorpusStats::arcs_per_graph() const noexcept { return per(arc_count, sentence_count); }

double CorpusStats::avg_length() const noexcept { return per(token_count, sentence_count); }

CorpusStats sentence_stats(const DepGraph& g) {
  CorpusStats s;
  s.sentence_count = 1;
  s.token_count = static_cast<std::size_t>(g.size());
  s.arc_count = g.arcs().size();
  const auto arcs = g.non_root_arcs();
  s.root_arc_count = s.arc_count - arcs.size();
  if (arcs.empty()) {
    s.zero_arc_sentences = 1;
  } else {
    const auto planes =
        greedy_assign(arcs, std::nullopt, IncompatibilityRule::SameDirectionCross).plane_count();
    s.plane_histogram.assign(planes, 0);
    s.plane_histogram[planes - 1] = 1;
  }
  s.cycle_count = graphlin::cycle_count(g);
  s.cycle_sentences = s.cycle_count > 0 ? 1 : 0;
  return s;
}

CorpusStats corpus_stats(const std::vector<DepGraph>& sentences, std::size_t jobs) {
  const auto parts =
      parallel_map(sentences.size(), jobs, [&](std::size_t i) { return sentence_stats(sentences[i]); });
  CorpusStats total;
  for (const auto& p : parts) total += p;
  return total;
}

std::vector<VocabStats> vocab_stats(const std::vector<DepGraph>& sentences,
                                    const std::vector<EncodingSpec>& specs, std::size_t jobs) {
  std::vector<VocabStats> out;
  for (const EncodingSpec& spec : specs) {
    const auto encoded =
        parallel_map(sentences.size(), jobs, [&](std::size_t i) { return encode(sentences[i], spec); });
    std::set<std::string> labels;
    std::set<std::string> relations;
    for (const LabelSeq& seq : encoded) {
      labels.insert(seq.structural.begin(), seq.structural.end());
      for (const auto& tuple : seq.relations) {
        for (const auto& r : tuple) {
          if (r != kNullRelation) relations.insert(r);
        }
      }
      for (const auto& root : seq.roots) {
        if (root) relations.insert(*root);
      }
    }
    const std::size_t bound = label_space(spec);
    if (bound != 0 && labels.size() > bound) {
      throw std::logic_error(spec.to_string() + " produced " + std::to_string(labels.size()) +
                             " labels, more than its space of " + std::to_string(bound));
    }
    out.push_back(VocabStats{spec, labels.size(), relations.size()});
  }
  return out;
}

}  // namespace graphlin
