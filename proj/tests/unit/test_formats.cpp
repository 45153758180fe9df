#include <gtest/gtest.h>

#include <sstream>

#include "graphlin/encoding.hpp"
#include "graphlin/errors.hpp"
#include "graphlin/formats.hpp"
#include "graphlin/generate.hpp"

using namespace graphlin;

namespace {

const char* const kSdp =
    "#SDP 2015\n"
    "#20001001\n"
    "1\tPierre\tPierre\tNNP\t-\t+\t_\t_\t_\n"
    "2\tVinken\t_generic_proper_ne_\tNNP\t-\t-\t_\tcompound\t_\n"
    "3\tjoined\tjoin\tVBD\t+\t+\tv:e-i-p\t_\t_\n"
    "4\tthe\tthe\tDT\t-\t-\t_\t_\t_\n"
    "\n"
    "#20001002\n"
    "1\tMr.\tMr.\tNNP\t-\t+\t_\t_\t_\n"
    "2\tVinken\tVinken\tNNP\t+\t-\t_\tcompound\tARG1\n"
    "3\tis\tbe\tVBZ\t-\t+\tv_id:e-i\t_\t_\n"
    "\n"
    "#20001003\n"
    "1\tOk\tok\tUH\t+\t-\t_\n"
    "\n";

CorpusDocument sdp(const std::string& text) {
  std::istringstream in(text);
  return read_sdp(in, "test.sdp");
}

CorpusDocument conllu(const std::string& text, EmptyNodePolicy p = EmptyNodePolicy::Skip) {
  std::istringstream in(text);
  return read_conllu_enhanced(in, "test.conllu", p);
}

std::string write(const CorpusDocument& doc) {
  std::ostringstream out;
  write_corpus(out, doc);
  return out.str();
}

std::size_t parse_error_line(const std::string& text, bool is_sdp) {
  try {
    if (is_sdp) {
      sdp(text);
    } else {
      conllu(text);
    }
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST(Sdp, ReadsTopsAndPredicateColumns) {
  const auto doc = sdp(kSdp);
  ASSERT_EQ(doc.sentences.size(), 3u);
  EXPECT_EQ(doc.header, std::vector<std::string>{"#SDP 2015"});
  const DepGraph& g = doc.sentences[0];
  EXPECT_EQ(g.sentence_id(), "20001001");
  EXPECT_EQ(g.size(), 4);
  EXPECT_TRUE(g.has_arc(0, 3));
  EXPECT_EQ(g.incoming(3)[0].relation, "TOP");
  EXPECT_TRUE(g.has_arc(1, 2));
  EXPECT_EQ(g.incoming(2)[0].relation, "compound");
  EXPECT_EQ(g.arcs().size(), 2u);
  EXPECT_EQ(g.token(3).extra.at("frame"), "v:e-i-p");
  EXPECT_EQ(g.token(2).extra.at("lemma"), "_generic_proper_ne_");

  const DepGraph& h = doc.sentences[1];
  EXPECT_TRUE(h.has_arc(1, 2));
  EXPECT_TRUE(h.has_arc(3, 2));
  ASSERT_EQ(h.incoming(2).size(), 3u);
  EXPECT_EQ(h.incoming(2)[0].relation, "TOP");
  EXPECT_EQ(h.incoming(2)[2].relation, "ARG1");
}

TEST(Sdp, TopWithoutArgumentsIsOneRootArc) {
  const auto g = sdp(kSdp).sentences[2];
  ASSERT_EQ(g.arcs().size(), 1u);
  EXPECT_EQ(g.arcs()[0], (Arc{0, 1, "TOP"}));
}

TEST(Sdp, RoundTripIsByteIdentical) {
  EXPECT_EQ(write(sdp(kSdp)), kSdp);
}

TEST(Sdp, ReadWriteReadIsStable) {
  const auto once = sdp(kSdp);
  const auto twice = sdp(write(once));
  EXPECT_EQ(once.sentences, twice.sentences);
}

TEST(Sdp, WithoutFrameColumn) {
  const std::string text =
      "#1\n"
      "1\ta\ta\tX\t-\t+\t_\n"
      "2\tb\tb\tX\t+\t-\tARG1\n\n";
  const auto doc = sdp(text);
  EXPECT_FALSE(doc.sdp_frame_column);
  EXPECT_TRUE(doc.sentences[0].has_arc(1, 2));
  EXPECT_EQ(write(doc), text);
}

TEST(Sdp, ErrorsNameTheLine) {
  EXPECT_EQ(parse_error_line("#1\n1\ta\ta\tX\t-\t-\t_\n2\tb\tb\tX\t-\n\n", true), 3u);
  EXPECT_EQ(parse_error_line("#1\n1\ta\ta\tX\t-\t-\t_\n3\tb\tb\tX\t-\t-\t_\n\n", true), 3u);
  EXPECT_EQ(parse_error_line("#1\n1\ta\ta\tX\t*\t-\t_\n\n", true), 2u);
  // An argument column without a matching predicate.
  EXPECT_EQ(parse_error_line("#1\n1\ta\ta\tX\t-\t-\t_\tARG1\n\n", true), 2u);
  // A predicate that is its own argument.
  EXPECT_EQ(parse_error_line("#1\n1\ta\ta\tX\t-\t+\t_\tARG1\n\n", true), 2u);
}

TEST(Sdp, WriterMarksPredicatesFromArcs) {
  CorpusDocument doc;
  doc.sentences.push_back(DepGraph::with_length(3, {{2, 1, "ARG1"}, {2, 3, "ARG2"}, {0, 2, "TOP"}}, "s1"));
  const std::string text = write(doc);
  EXPECT_EQ(text,
            "#s1\n"
            "1\t_\t_\t_\t-\t-\t_\tARG1\n"
            "2\t_\t_\t_\t+\t+\t_\t_\n"
            "3\t_\t_\t_\t-\t-\t_\tARG2\n\n");
  EXPECT_TRUE(same_arcs(sdp(text).sentences[0], doc.sentences[0]));
}

const char* const kConllu =
    "# sent_id = s1\n"
    "# text = They wanted to leave\n"
    "1\tThey\tthey\tPRON\tPRP\t_\t2\tnsubj\t2:nsubj|4:nsubj:xsubj\t_\n"
    "2\twanted\twant\tVERB\tVBD\t_\t0\troot\t0:root\t_\n"
    "3\tto\tto\tPART\tTO\t_\t4\tmark\t4:mark\t_\n"
    "4\tleave\tleave\tVERB\tVB\t_\t2\txcomp\t2:xcomp\tSpaceAfter=No\n"
    "\n"
    "# sent_id = s2\n"
    "1-2\tdel\t_\t_\t_\t_\t_\t_\t_\t_\n"
    "1\tde\tde\tADP\t_\t_\t2\tcase\t2:case\t_\n"
    "2\tel\tel\tDET\t_\t_\t0\troot\t0:root\t_\n"
    "3\tx\tx\tX\t_\t_\t2\tdep\t_\t_\n"
    "\n";

TEST(Conllu, DepsColumnDefinesTheGraph) {
  const auto doc = conllu(kConllu);
  ASSERT_EQ(doc.sentences.size(), 2u);
  const DepGraph& g = doc.sentences[0];
  EXPECT_EQ(g.sentence_id(), "s1");
  EXPECT_TRUE(g.has_arc(2, 1));
  EXPECT_TRUE(g.has_arc(4, 1));
  EXPECT_EQ(g.incoming(1)[1].relation, "nsubj:xsubj");
  EXPECT_EQ(g.incoming(2)[0], (Arc{0, 2, "root"}));
  EXPECT_TRUE(doc.sentences[1].incoming(3).empty());
}

TEST(Conllu, RoundTripKeepsCommentsAndRanges) {
  const auto doc = conllu(kConllu);
  EXPECT_EQ(doc.meta[1].ranges.size(), 1u);
  EXPECT_EQ(write(doc), kConllu);
  EXPECT_EQ(conllu(write(doc)).sentences, doc.sentences);
}

TEST(Conllu, EmptyNodeSentencesAreSkippedOrRejected) {
  const std::string text =
      "# sent_id = a\n"
      "1\tx\t_\t_\t_\t_\t0\troot\t0:root\t_\n"
      "1.1\ty\t_\t_\t_\t_\t_\t_\t1:dep\t_\n"
      "\n"
      "# sent_id = b\n"
      "1\tz\t_\t_\t_\t_\t0\troot\t0:root|1.1:x\t_\n"
      "\n"
      "# sent_id = c\n"
      "1\tw\t_\t_\t_\t_\t0\troot\t0:root\t_\n"
      "\n";
  const auto doc = conllu(text);
  ASSERT_EQ(doc.sentences.size(), 1u);
  EXPECT_EQ(doc.sentences[0].sentence_id(), "c");
  EXPECT_EQ(doc.warnings.size(), 2u);
  EXPECT_THROW(conllu(text, EmptyNodePolicy::Error), ParseError);
}

TEST(Conllu, MalformedDeps) {
  const auto row = [](const std::string& deps) {
    return "1\tx\t_\t_\t_\t_\t0\troot\t" + deps + "\t_\n\n";
  };
  EXPECT_EQ(parse_error_line(row("0root"), false), 1u);
  EXPECT_EQ(parse_error_line(row("a:root"), false), 1u);
  EXPECT_EQ(parse_error_line(row("0:"), false), 1u);
  EXPECT_EQ(parse_error_line(row("0:root|0:root"), false), 1u);
  EXPECT_EQ(parse_error_line(row("1:self"), false), 1u);
  EXPECT_EQ(parse_error_line("1\tx\t_\t_\n\n", false), 1u);
}

TEST(LabelFile, FixtureAbsoluteColumns) {
  std::ostringstream out;
  write_labels(out, EncodingSpec::parse("abs"), {encode(fixture_fig1(), EncodingSpec::parse("abs"))});
  EXPECT_EQ(out.str(),
            "# encoding=abs\n"
            "# sent_id=fig1\n"
            "1\tw1\t(2)\tdep\t_\n"
            "2\tw2\t()\t_\t_\n"
            "3\tw3\t(2,6)\tdep|dep\t_\n"
            "4\tw4\t(1)\tdep\t_\n"
            "5\tw5\t(1,3,4)\tdep|dep|dep\t_\n"
            "6\tw6\t(5)\tdep\t_\n"
            "\n");
}

TEST(LabelFile, RelationsJoinWithPipes) {
  LabelSeq seq;
  seq.structural = {"1100"};
  seq.relations = {{"NULL", "ARG1"}};
  seq.roots = {std::string("TOP")};
  std::ostringstream out;
  write_labels(out, EncodingSpec::parse("b4:1"), {seq});
  EXPECT_EQ(out.str(), "# encoding=b4:1\n1\t_\t1100\tNULL|ARG1\tTOP\n\n");
}

TEST(LabelFile, WriteReadIdentity) {
  GraphGenConfig cfg;
  const auto doc = generate_corpus(cfg, 200, 17);
  for (auto s : {"abs", "rel", "b:2", "b4:3", "b6:3"}) {
    const auto spec = EncodingSpec::parse(s);
    std::vector<LabelSeq> labels;
    for (const auto& g : doc.sentences) labels.push_back(encode(g, spec));
    std::ostringstream out;
    write_labels(out, spec, labels);
    std::istringstream in(out.str());
    const LabelDocument back = read_labels(in);
    EXPECT_EQ(back.spec, spec);
    ASSERT_EQ(back.sentences.size(), labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      LabelSeq expected = labels[i];
      expected.coverage = {};
      ASSERT_EQ(back.sentences[i], expected) << s << " sentence " << i;
    }
    std::ostringstream again;
    write_labels(again, back.spec, back.sentences);
    EXPECT_EQ(again.str(), out.str());
  }
}

TEST(LabelFile, RejectsMismatchedChannels) {
  LabelSeq seq;
  seq.structural = {"()", "()"};
  seq.relations = {{}};
  seq.roots = {std::nullopt, std::nullopt};
  std::ostringstream out;
  EXPECT_THROW(write_labels(out, EncodingSpec::parse("abs"), {seq}), std::invalid_argument);
}

TEST(LabelFile, ReaderErrors) {
  const auto line_of = [](const std::string& text) -> std::size_t {
    std::istringstream in(text);
    try {
      read_labels(in, "x.tsv");
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1\ta\t()\t_\t_\n"), 1u);
  EXPECT_EQ(line_of("# encoding=b9\n"), 1u);
  EXPECT_EQ(line_of("# encoding=abs\n1\ta\t()\t_\n"), 2u);
  EXPECT_EQ(line_of("# encoding=abs\n1\ta\t()\t_\t_\n3\tb\t()\t_\t_\n"), 3u);
  std::istringstream empty("");
  EXPECT_THROW(read_labels(empty), ParseError);
}

TEST(Fixture, UnlabeledArcsShareOneRelation) {
  const DepGraph g = fixture_fig1();
  for (const Arc& a : g.arcs()) EXPECT_EQ(a.relation, "dep");
}
