#include <algorithm>
#include <istream>
#include <ostream>

#include "graphlin/errors.hpp"
#include "graphlin/formats.hpp"
#include "text.hpp"

namespace graphlin {
namespace {

constexpr std::size_t kColumnsWithFrame = 7;
constexpr std::size_t kColumnsWithoutFrame = 6;

struct PendingSentence {
  std::string id;
  SentenceMeta meta;
  std::size_t first_line = 0;
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;

  bool empty() const noexcept { return id.empty() && meta.comments.empty() && rows.empty(); }
};

void flush(PendingSentence& pending, CorpusDocument& doc, bool& frame_known,
           const std::string& source) {
  if (pending.rows.empty()) {
    if (!pending.empty()) {
      throw ParseError(source, pending.first_line, "sentence header without tokens");
    }
    return;
  }
  const auto& first = pending.rows.front();
  const std::size_t columns = first.second.size();
  std::vector<int> predicates;
  for (std::size_t r = 0; r < pending.rows.size(); ++r) {
    const auto& [line, cols] = pending.rows[r];
    if (cols.size() != columns) {
      throw ParseError(source, line, "expected " + std::to_string(columns) + " columns, found " +
                                         std::to_string(cols.size()));
    }
    if (cols.size() < kColumnsWithoutFrame) {
      throw ParseError(source, line, "SDP rows need at least 6 columns");
    }
    const auto id = text::to_int(cols[0]);
    if (!id || *id != static_cast<int>(r) + 1) {
      throw ParseError(source, line, "non-contiguous token id '" + cols[0] + "', expected " +
                                         std::to_string(r + 1));
    }
    if (cols[5] == "+") {
      predicates.push_back(*id);
    } else if (cols[5] != "-") {
      throw ParseError(source, line, "pred column must be '+' or '-'");
    }
    if (cols[4] != "+" && cols[4] != "-") {
      throw ParseError(source, line, "top column must be '+' or '-'");
    }
  }

  const std::size_t fixed = columns - std::min(columns, predicates.size());
  if (fixed != kColumnsWithFrame && fixed != kColumnsWithoutFrame) {
    throw ParseError(source, first.first,
                     std::to_string(columns) + " columns do not match " +
                         std::to_string(predicates.size()) + " predicates");
  }
  const bool with_frame = fixed == kColumnsWithFrame;
  if (frame_known && with_frame != doc.sdp_frame_column) {
    throw ParseError(source, first.first, "sentences disagree on the presence of a frame column");
  }
  frame_known = true;
  doc.sdp_frame_column = with_frame;

  std::vector<Token> tokens;
  std::vector<Arc> arcs;
  for (const auto& [line, cols] : pending.rows) {
    const int index = static_cast<int>(tokens.size()) + 1;
    Token token{index, cols[1], {{"lemma", cols[2]}, {"pos", cols[3]}, {"pred", cols[5]}}};
    if (with_frame) token.extra.emplace("frame", cols[6]);
    tokens.push_back(std::move(token));
    if (cols[4] == "+") arcs.push_back(Arc{kRootPosition, index, "TOP"});
    for (std::size_t p = 0; p < predicates.size(); ++p) {
      const std::string& cell = cols[fixed + p];
      if (cell != "_") arcs.push_back(Arc{predicates[p], index, cell});
    }
  }
  try {
    doc.sentences.emplace_back(std::move(tokens), std::move(arcs), std::move(pending.id));
  } catch (const GraphError& e) {
    throw ParseError(source, first.first, e.what());
  }
  doc.meta.push_back(std::move(pending.meta));
  pending = PendingSentence{};
}

}  // namespace

CorpusDocument read_sdp(std::istream& in, std::string_view source_view) {
  const std::string source(source_view);
  CorpusDocument doc;
  doc.source_format = SourceFormat::Sdp;
  text::LineReader reader(in);
  PendingSentence pending;
  bool frame_known = false;
  bool seen_sentence = false;
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) {
      flush(pending, doc, frame_known, source);
      continue;
    }
    if (line.front() == '#') {
      if (!seen_sentence && pending.empty() && doc.sentences.empty() &&
          line.rfind("#SDP", 0) == 0) {
        doc.header.push_back(line);
        continue;
      }
      if (!pending.rows.empty()) {
        throw ParseError(source, reader.number(), "comment line inside a sentence");
      }
      if (pending.empty()) pending.first_line = reader.number();
      if (pending.id.empty() && pending.meta.comments.empty()) {
        pending.id = line.substr(1);
      } else {
        pending.meta.comments.push_back(line);
      }
      seen_sentence = true;
      continue;
    }
    seen_sentence = true;
    if (pending.empty()) pending.first_line = reader.number();
    std::vector<std::string> cols;
    for (auto field : text::split(line, '\t')) cols.emplace_back(field);
    pending.rows.emplace_back(reader.number(), std::move(cols));
  }
  flush(pending, doc, frame_known, source);
  return doc;
}

void write_sdp(std::ostream& out, const CorpusDocument& doc) {
  for (const auto& h : doc.header) out << h << '\n';
  const auto extra = [](const Token& t, const char* key) -> std::string {
    const auto it = t.extra.find(key);
    return it == t.extra.end() ? "_" : text::or_underscore(it->second);
  };
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const DepGraph& g = doc.sentences[s];
    const int n = g.size();
    if (!g.sentence_id().empty()) out << '#' << g.sentence_id() << '\n';
    if (s < doc.meta.size()) {
      for (const auto& c : doc.meta[s].comments) out << c << '\n';
    }

    std::vector<char> is_pred(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> is_top(static_cast<std::size_t>(n) + 1, 0);
    for (const Arc& arc : g.arcs()) {
      if (arc.is_root()) {
        is_top[static_cast<std::size_t>(arc.dep)] = 1;
      } else {
        is_pred[static_cast<std::size_t>(arc.head)] = 1;
      }
    }
    std::vector<int> predicates;
    for (int i = 1; i <= n; ++i) {
      const auto it = g.token(i).extra.find("pred");
      if (it != g.token(i).extra.end() && it->second == "+") is_pred[static_cast<std::size_t>(i)] = 1;
      if (is_pred[static_cast<std::size_t>(i)]) predicates.push_back(i);
    }

    for (int i = 1; i <= n; ++i) {
      const Token& t = g.token(i);
      out << i << '\t' << text::or_underscore(t.form) << '\t' << extra(t, "lemma") << '\t'
          << extra(t, "pos") << '\t' << (is_top[static_cast<std::size_t>(i)] ? '+' : '-') << '\t'
          << (is_pred[static_cast<std::size_t>(i)] ? '+' : '-');
      if (doc.sdp_frame_column) out << '\t' << extra(t, "frame");
      const auto in = g.incoming(i);
      for (int p : predicates) {
        const auto it = std::find_if(in.begin(), in.end(), [p](const Arc& a) { return a.head == p; });
        out << '\t' << (it == in.end() ? std::string("_") : text::or_underscore(it->relation));
      }
      out << '\n';
    }
    out << '\n';
  }
}

}  // namespace graphlin
