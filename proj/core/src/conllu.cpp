#include <algorithm>
#include <istream>
#include <ostream>

#include "graphlin/errors.hpp"
#include "graphlin/formats.hpp"
#include "text.hpp"

namespace graphlin {
namespace {

constexpr std::size_t kColumns = 10;
constexpr const char* kExtraColumns[] = {"lemma", "upos", "xpos", "feats", "head", "deprel"};
constexpr std::string_view kSentIdPrefix = "# sent_id = ";

struct PendingSentence {
  SentenceMeta meta;
  std::string id;
  std::vector<Token> tokens;
  std::vector<Arc> arcs;
  std::size_t first_line = 0;
  std::size_t empty_node_line = 0;

  bool empty() const noexcept { return meta.comments.empty() && meta.ranges.empty() && tokens.empty(); }
};

void parse_deps(std::string_view deps, int dep, std::vector<Arc>& arcs, bool& empty_node_ref,
                const std::string& source, std::size_t line) {
  if (deps == "_") return;
  for (auto item : text::split(deps, '|')) {
    const auto colon = item.find(':');
    if (colon == std::string_view::npos || colon == 0 || colon + 1 == item.size()) {
      throw ParseError(source, line, "malformed DEPS entry '" + std::string(item) + "'");
    }
    const auto head_text = item.substr(0, colon);
    if (head_text.find('.') != std::string_view::npos) {
      empty_node_ref = true;
      continue;
    }
    const auto head = text::to_int(head_text);
    if (!head || *head < 0) {
      throw ParseError(source, line, "malformed DEPS head '" + std::string(head_text) + "'");
    }
    arcs.push_back(Arc{*head, dep, std::string(item.substr(colon + 1))});
  }
}

void flush(PendingSentence& pending, CorpusDocument& doc, EmptyNodePolicy policy,
           const std::string& source) {
  if (pending.empty()) return;
  if (pending.tokens.empty()) {
    throw ParseError(source, pending.first_line, "sentence without tokens");
  }
  if (pending.empty_node_line != 0) {
    const std::string note = "sentence '" + pending.id + "' contains empty nodes";
    if (policy == EmptyNodePolicy::Error) throw ParseError(source, pending.empty_node_line, note);
    doc.warnings.push_back(source + ":" + std::to_string(pending.empty_node_line) + ": " + note +
                           "; skipped");
    pending = PendingSentence{};
    return;
  }
  try {
    doc.sentences.emplace_back(std::move(pending.tokens), std::move(pending.arcs),
                               std::move(pending.id));
  } catch (const GraphError& e) {
    throw ParseError(source, pending.first_line, e.what());
  }
  doc.meta.push_back(std::move(pending.meta));
  pending = PendingSentence{};
}

}  // namespace

CorpusDocument read_conllu_enhanced(std::istream& in, std::string_view source_view,
                                    EmptyNodePolicy empty_nodes) {
  const std::string source(source_view);
  CorpusDocument doc;
  doc.source_format = SourceFormat::ConlluEnhanced;
  text::LineReader reader(in);
  PendingSentence pending;
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) {
      flush(pending, doc, empty_nodes, source);
      continue;
    }
    if (pending.empty()) pending.first_line = reader.number();
    if (line.front() == '#') {
      if (!pending.tokens.empty()) {
        throw ParseError(source, reader.number(), "comment line inside a sentence");
      }
      if (line.rfind(kSentIdPrefix, 0) == 0) pending.id = line.substr(kSentIdPrefix.size());
      pending.meta.comments.push_back(line);
      continue;
    }
    const auto cols = text::split(line, '\t');
    if (cols.size() != kColumns) {
      throw ParseError(source, reader.number(),
                       "expected 10 columns, found " + std::to_string(cols.size()));
    }
    const std::string_view id = cols[0];
    if (id.find('-') != std::string_view::npos) {
      pending.meta.ranges.emplace_back(static_cast<int>(pending.tokens.size()) + 1, line);
      continue;
    }
    if (id.find('.') != std::string_view::npos) {
      if (pending.empty_node_line == 0) pending.empty_node_line = reader.number();
      continue;
    }
    const int expected = static_cast<int>(pending.tokens.size()) + 1;
    const auto index = text::to_int(id);
    if (!index || *index != expected) {
      throw ParseError(source, reader.number(), "non-contiguous token id '" + std::string(id) +
                                                    "', expected " + std::to_string(expected));
    }
    Token token{expected, std::string(cols[1]), {}};
    for (std::size_t c = 0; c < std::size(kExtraColumns); ++c) {
      token.extra.emplace(kExtraColumns[c], std::string(cols[c + 2]));
    }
    token.extra.emplace("misc", std::string(cols[9]));
    pending.tokens.push_back(std::move(token));
    bool empty_node_ref = false;
    parse_deps(cols[8], expected, pending.arcs, empty_node_ref, source, reader.number());
    if (empty_node_ref && pending.empty_node_line == 0) pending.empty_node_line = reader.number();
  }
  flush(pending, doc, empty_nodes, source);
  return doc;
}

void write_conllu_enhanced(std::ostream& out, const CorpusDocument& doc) {
  for (const auto& h : doc.header) out << h << '\n';
  const auto extra = [](const Token& t, const char* key) -> std::string {
    const auto it = t.extra.find(key);
    return it == t.extra.end() ? "_" : text::or_underscore(it->second);
  };
  static const SentenceMeta kNoMeta;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const DepGraph& g = doc.sentences[s];
    const SentenceMeta& meta = s < doc.meta.size() ? doc.meta[s] : kNoMeta;
    const bool has_id_comment =
        std::any_of(meta.comments.begin(), meta.comments.end(),
                    [](const std::string& c) { return c.rfind(kSentIdPrefix, 0) == 0; });
    if (!has_id_comment && !g.sentence_id().empty()) {
      out << kSentIdPrefix << g.sentence_id() << '\n';
    }
    for (const auto& c : meta.comments) out << c << '\n';
    auto range = meta.ranges.begin();
    for (int i = 1; i <= g.size(); ++i) {
      for (; range != meta.ranges.end() && range->first == i; ++range) out << range->second << '\n';
      const Token& t = g.token(i);
      out << i << '\t' << text::or_underscore(t.form);
      for (const char* key : kExtraColumns) out << '\t' << extra(t, key);
      out << '\t';
      const auto in = g.incoming(i);
      if (in.empty()) out << '_';
      for (std::size_t a = 0; a < in.size(); ++a) {
        if (a > 0) out << '|';
        out << in[a].head << ':' << text::or_underscore(in[a].relation);
      }
      out << '\t' << extra(t, "misc") << '\n';
    }
    out << '\n';
  }
}

}  // namespace graphlin
