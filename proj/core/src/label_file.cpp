#include <istream>
#include <ostream>
#include <stdexcept>

#include "graphlin/errors.hpp"
#include "graphlin/formats.hpp"
#include "text.hpp"

namespace graphlin {
namespace {

constexpr std::string_view kHeaderPrefix = "# encoding=";
constexpr std::string_view kSentIdPrefix = "# sent_id=";
constexpr std::size_t kColumns = 5;

}  // namespace

SourceFormat parse_source_format(std::string_view name) {
  if (name == "sdp") return SourceFormat::Sdp;
  if (name == "conllu") return SourceFormat::ConlluEnhanced;
  throw std::invalid_argument("unknown format '" + std::string(name) + "' (expected sdp or conllu)");
}

std::string_view to_string(SourceFormat format) noexcept {
  return format == SourceFormat::Sdp ? "sdp" : "conllu";
}

CorpusDocument read_corpus(std::istream& in, SourceFormat format, std::string_view source,
                           EmptyNodePolicy empty_nodes) {
  return format == SourceFormat::Sdp ? read_sdp(in, source)
                                     : read_conllu_enhanced(in, source, empty_nodes);
}

void write_corpus(std::ostream& out, const CorpusDocument& doc) {
  if (doc.source_format == SourceFormat::Sdp) {
    write_sdp(out, doc);
  } else {
    write_conllu_enhanced(out, doc);
  }
}

void write_labels(std::ostream& out, const EncodingSpec& spec,
                  const std::vector<LabelSeq>& sentences) {
  out << kHeaderPrefix << spec.to_string() << '\n';
  for (const LabelSeq& seq : sentences) {
    const std::size_t n = seq.size();
    if (seq.relations.size() != n || seq.roots.size() != n ||
        (!seq.forms.empty() && seq.forms.size() != n)) {
      throw std::invalid_argument("sentence '" + seq.sentence_id + "': label count does not match token count");
    }
    if (!seq.sentence_id.empty()) out << kSentIdPrefix << seq.sentence_id << '\n';
    for (std::size_t i = 0; i < n; ++i) {
      out << i + 1 << '\t' << (seq.forms.empty() ? "_" : text::or_underscore(seq.forms[i])) << '\t'
          << text::or_underscore(seq.structural[i]) << '\t';
      const auto& rels = seq.relations[i];
      if (rels.empty()) out << '_';
      for (std::size_t r = 0; r < rels.size(); ++r) {
        if (r > 0) out << '|';
        out << text::or_underscore(rels[r]);
      }
      out << '\t' << (seq.roots[i] ? text::or_underscore(*seq.roots[i]) : std::string("_")) << '\n';
    }
    out << '\n';
  }
}

LabelDocument read_labels(std::istream& in, std::string_view source_view) {
  const std::string source(source_view);
  text::LineReader reader(in);
  std::string line;
  LabelDocument doc;
  bool have_header = false;
  while (reader.next(line)) {
    if (line.empty()) continue;
    if (line.rfind(kHeaderPrefix, 0) == 0) {
      try {
        doc.spec = EncodingSpec::parse(std::string_view(line).substr(kHeaderPrefix.size()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(source, reader.number(), e.what());
      }
      have_header = true;
      break;
    }
    throw ParseError(source, reader.number(), "expected '# encoding=<spec>' header");
  }
  if (!have_header) throw ParseError(source, reader.number(), "missing '# encoding=<spec>' header");

  LabelSeq current;
  std::size_t start_line = 0;
  std::size_t first_row = 0;
  const auto flush = [&] {
    if (current.size() == 0 && current.sentence_id.empty()) return;
    if (current.size() == 0) throw ParseError(source, start_line, "sentence without rows");
    doc.sentences.push_back(std::move(current));
    doc.first_row_lines.push_back(first_row);
    current = LabelSeq{};
    start_line = 0;
  };
  while (reader.next(line)) {
    if (line.empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      if (line.rfind(kSentIdPrefix, 0) != 0) continue;
      if (current.size() > 0) flush();
      start_line = reader.number();
      current.sentence_id = line.substr(kSentIdPrefix.size());
      continue;
    }
    const auto cols = text::split(line, '\t');
    if (cols.size() != kColumns) {
      throw ParseError(source, reader.number(),
                       "expected 5 columns, found " + std::to_string(cols.size()));
    }
    const auto index = text::to_int(cols[0]);
    if (!index || *index != static_cast<int>(current.size()) + 1) {
      throw ParseError(source, reader.number(), "row index '" + std::string(cols[0]) +
                                                    "' out of sequence, expected " +
                                                    std::to_string(current.size() + 1));
    }
    if (current.size() == 0) {
      first_row = reader.number();
      if (start_line == 0) start_line = first_row;
    }
    current.forms.emplace_back(cols[1]);
    current.structural.emplace_back(cols[2] == "_" ? std::string_view{} : cols[2]);
    std::vector<std::string> rels;
    if (cols[3] != "_") {
      for (auto r : text::split(cols[3], '|')) rels.emplace_back(r);
    }
    current.relations.push_back(std::move(rels));
    current.roots.push_back(cols[4] == "_" ? std::nullopt : std::optional<std::string>(cols[4]));
  }
  flush();
  return doc;
}

}  // namespace graphlin
