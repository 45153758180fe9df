#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphlin/graph.hpp"
#include "graphlin/labels.hpp"

namespace graphlin {

enum class SourceFormat : std::uint8_t { Sdp, ConlluEnhanced };

/// Parses "sdp" or "conllu". Throws std::invalid_argument.
SourceFormat parse_source_format(std::string_view name);
std::string_view to_string(SourceFormat format) noexcept;

/// Sentence-level material the graph model does not cover but a lossless
/// rewrite needs: comment lines and CoNLL-U multiword-token lines.
struct SentenceMeta {
  std::vector<std::string> comments;
  /// (index of the token the line precedes, raw line).
  std::vector<std::pair<int, std::string>> ranges;

  bool operator==(const SentenceMeta&) const = default;
};

struct CorpusDocument {
  std::vector<DepGraph> sentences;
  SourceFormat source_format = SourceFormat::Sdp;
  /// Parallel to `sentences`; may be empty for synthetic documents.
  std::vector<SentenceMeta> meta;
  /// File preamble, e.g. "#SDP 2015".
  std::vector<std::string> header;
  /// SDP 2015 files carry a frame/sense column; SDP 2014 files do not.
  bool sdp_frame_column = true;
  /// Non-fatal notes from the reader, e.g. skipped sentences.
  std::vector<std::string> warnings;
};

// --- SDP 2015 ---------------------------------------------------------------

/// Columns: id form lemma pos top pred [frame] arg_1 .. arg_p. A top '+' yields
/// a root arc with relation "TOP"; argument column j belongs to the j-th token
/// (in position order) whose pred column is '+'.
CorpusDocument read_sdp(std::istream& in, std::string_view source = "<stdin>");
void write_sdp(std::ostream& out, const CorpusDocument& doc);

// --- CoNLL-U with enhanced dependencies -------------------------------------

enum class EmptyNodePolicy : std::uint8_t { Skip, Error };

/// Graphs come from the DEPS column only. Sentences with empty nodes (decimal
/// ids) are skipped with a warning, or rejected under EmptyNodePolicy::Error.
CorpusDocument read_conllu_enhanced(std::istream& in, std::string_view source = "<stdin>",
                                    EmptyNodePolicy empty_nodes = EmptyNodePolicy::Skip);
void write_conllu_enhanced(std::ostream& out, const CorpusDocument& doc);

CorpusDocument read_corpus(std::istream& in, SourceFormat format,
                           std::string_view source = "<stdin>",
                           EmptyNodePolicy empty_nodes = EmptyNodePolicy::Skip);
void write_corpus(std::ostream& out, const CorpusDocument& doc);

// --- label TSV ----------------------------------------------------------------

/// "# encoding=<spec>" header, then per sentence an optional "# sent_id=<id>"
/// line and one row per token: index, form, structural label, relations joined
/// by '|' ("_" when empty), root relation ("_" when none). Sentences are
/// separated by a blank line.
struct LabelDocument {
  EncodingSpec spec;
  std::vector<LabelSeq> sentences;
  /// Line number of each sentence's first row, for diagnostics.
  std::vector<std::size_t> first_row_lines;
};

void write_labels(std::ostream& out, const EncodingSpec& spec,
                  const std::vector<LabelSeq>& sentences);
LabelDocument read_labels(std::istream& in, std::string_view source = "<stdin>");

// --- fixtures -----------------------------------------------------------------

/// The six-token relaxed 2-planar example graph: 2->1, 2->3, 3->5, 4->5, 5->6,
/// 6->3, 1->4, 1->5 with no root arcs.
DepGraph fixture_fig1();

}  // namespace graphlin
