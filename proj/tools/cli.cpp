#include "cli.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <memory>
#include <sstream>

#include "graphlin/encoding.hpp"
#include "graphlin/errors.hpp"
#include "graphlin/formats.hpp"
#include "graphlin/generate.hpp"
#include "graphlin/metrics.hpp"
#include "graphlin/parallel.hpp"
#include "graphlin/stats.hpp"

namespace graphlin::cli {
namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kDefaultCoverageSpecs = "abs,rel,b:2,b:3,b4:2,b4:3,b4:4,b6:2,b6:3,b6:4";
constexpr const char* kDefaultVocabSpecs = "abs,rel,b:2,b4:3,b6:3";

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::vector<std::string> inputs;
  std::string format = "conllu";
  std::string spec;
  std::string output = "-";
  std::size_t jobs = 1;
  bool strict = false;
  bool json = false;
  bool macro = false;
  bool keep_empty_nodes = false;
  // gen
  std::size_t count = 100;
  std::uint64_t seed = 1;
  GraphGenConfig gen;
  bool no_cycles = false;
};

std::string percent(double fraction) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << 100.0 * fraction;
  return s.str();
}

std::string fixed2(double value) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(2) << value;
  return s.str();
}

// Holds either a file stream or a reference to the caller's stream.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : path_(path) {
    if (path == "-") {
      stream_ = &fallback;
    } else {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError(path + ": cannot open for writing");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw IoError(path_ + ": write failed");
  }

 private:
  std::string path_;
  std::ofstream file_;
  std::ostream* stream_ = nullptr;
};

template <class Reader>
auto with_input(const std::string& path, std::istream& in, Reader&& reader) {
  if (path == "-") return reader(in, std::string("<stdin>"));
  std::ifstream file(path, std::ios::binary);
  if (!file) throw IoError(path + ": cannot open for reading");
  return reader(file, path);
}

CorpusDocument load_corpus(const Config& cfg, std::istream& in, spdlog::logger& log) {
  const SourceFormat format = parse_source_format(cfg.format);
  const EmptyNodePolicy policy =
      cfg.keep_empty_nodes ? EmptyNodePolicy::Error : EmptyNodePolicy::Skip;
  CorpusDocument all;
  all.source_format = format;
  bool first = true;
  for (const auto& path : cfg.inputs) {
    CorpusDocument doc = with_input(path, in, [&](std::istream& s, const std::string& name) {
      return read_corpus(s, format, name, policy);
    });
    if (first) {
      all.header = doc.header;
      all.sdp_frame_column = doc.sdp_frame_column;
      first = false;
    }
    for (auto& w : doc.warnings) log.warn("{}", w);
    for (auto& g : doc.sentences) all.sentences.push_back(std::move(g));
    for (auto& m : doc.meta) all.meta.push_back(std::move(m));
  }
  log.info("read {} sentences", all.sentences.size());
  return all;
}

int cmd_encode(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err,
               spdlog::logger& log) {
  const EncodingSpec spec = EncodingSpec::parse(cfg.spec.empty() ? "b4:3" : cfg.spec);
  const CorpusDocument doc = load_corpus(cfg, in, log);
  const auto labels = parallel_map(doc.sentences.size(), cfg.jobs,
                                   [&](std::size_t i) { return encode(doc.sentences[i], spec); });
  CoverageReport coverage;
  for (const auto& seq : labels) coverage += seq.coverage;
  Output output(cfg.output, out);
  write_labels(output.stream(), spec, labels);
  output.finish();
  const double kept = coverage.total_arcs == 0
                          ? 1.0
                          : 1.0 - static_cast<double>(coverage.dropped_arcs) /
                                      static_cast<double>(coverage.total_arcs);
  err << "encoded " << labels.size() << " sentences with " << spec.to_string() << ": dropped "
      << coverage.dropped_arcs << " of " << coverage.total_arcs << " arcs (" << percent(kept)
      << "% kept)\n";
  return kOk;
}

int cmd_decode(const Config& cfg, std::istream& in, std::ostream& out, std::ostream& err,
               spdlog::logger& log) {
  const std::string path = cfg.inputs.empty() ? "-" : cfg.inputs.front();
  const std::string source = path == "-" ? "<stdin>" : path;
  const LabelDocument labels = with_input(
      path, in, [](std::istream& s, const std::string& name) { return read_labels(s, name); });
  const EncodingSpec spec = cfg.spec.empty() ? labels.spec : EncodingSpec::parse(cfg.spec);
  if (!(spec == labels.spec)) {
    throw std::invalid_argument("--spec " + spec.to_string() + " disagrees with file header " +
                                labels.spec.to_string());
  }
  const auto results = parallel_map(labels.sentences.size(), cfg.jobs, [&](std::size_t s) {
    try {
      return decode_with_repairs(labels.sentences[s], spec);
    } catch (const LabelSyntaxError& e) {
      throw ParseError(source, labels.first_row_lines[s] + static_cast<std::size_t>(e.token()) - 1,
                       e.what());
    }
  });

  std::size_t repaired = 0;
  for (std::size_t s = 0; s < results.size(); ++s) {
    if (results[s].well_formed()) continue;
    ++repaired;
    const auto& r = results[s].repairs;
    if (cfg.strict) {
      err << source << ':' << labels.first_row_lines[s] << ": sentence '"
          << labels.sentences[s].sentence_id << "' is ill-formed: " << r.size()
          << " repair(s), first: " << r.front().describe() << '\n';
      return kIllFormed;
    }
    log.debug("sentence '{}': {} repair(s)", labels.sentences[s].sentence_id, r.size());
  }
  if (repaired > 0) log.warn("{} of {} sentences needed repairs", repaired, results.size());

  CorpusDocument doc;
  doc.source_format = parse_source_format(cfg.format);
  if (doc.source_format == SourceFormat::Sdp) doc.header.push_back("#SDP 2015");
  for (const auto& r : results) doc.sentences.push_back(r.graph);
  Output output(cfg.output, out);
  write_corpus(output.stream(), doc);
  output.finish();
  return kOk;
}

int cmd_coverage(const Config& cfg, std::istream& in, std::ostream& out, spdlog::logger& log) {
  const auto specs = parse_spec_list(cfg.spec.empty() ? kDefaultCoverageSpecs : cfg.spec);
  const CorpusDocument doc = load_corpus(cfg, in, log);
  std::vector<OracleCoverage> rows;
  for (const auto& spec : specs) rows.push_back(oracle_coverage(doc, spec, cfg.jobs));

  Output output(cfg.output, out);
  auto& os = output.stream();
  if (cfg.json) {
    Json j;
    j["sentences"] = doc.sentences.size();
    j["coverage"] = Json::array();
    for (const auto& r : rows) {
      j["coverage"].push_back({{"spec", r.spec.to_string()},
                               {"of", r.eval.uf},
                               {"lf", r.eval.lf},
                               {"dropped_arcs", r.coverage.dropped_arcs},
                               {"total_arcs", r.coverage.total_arcs},
                               {"repaired_sentences", r.repaired_sentences}});
    }
    os << j.dump(2) << '\n';
  } else {
    os << std::left << std::setw(8) << "spec" << std::right << std::setw(8) << "OF"
       << std::setw(10) << "dropped" << std::setw(10) << "arcs" << '\n';
    for (const auto& r : rows) {
      os << std::left << std::setw(8) << r.spec.to_string() << std::right << std::setw(8)
         << percent(r.eval.uf) << std::setw(10) << r.coverage.dropped_arcs << std::setw(10)
         << r.coverage.total_arcs << '\n';
    }
  }
  output.finish();
  return kOk;
}

int cmd_eval(const Config& cfg, std::istream& in, std::ostream& out, spdlog::logger& log) {
  if (cfg.inputs.size() != 2) throw std::invalid_argument("eval needs GOLD and PREDICTED files");
  Config one = cfg;
  one.inputs = {cfg.inputs[0]};
  const CorpusDocument gold = load_corpus(one, in, log);
  one.inputs = {cfg.inputs[1]};
  const CorpusDocument pred = load_corpus(one, in, log);
  const EvalResult r = evaluate(gold, pred, cfg.jobs);

  Output output(cfg.output, out);
  auto& os = output.stream();
  if (cfg.json) {
    Json j{{"sentences", r.counts.sentences},
           {"gold_arcs", r.counts.gold_arcs},
           {"predicted_arcs", r.counts.predicted_arcs},
           {"unlabeled_matches", r.counts.unlabeled_matches},
           {"labeled_matches", r.counts.labeled_matches},
           {"up", r.up}, {"ur", r.ur}, {"uf", r.uf},
           {"lp", r.lp}, {"lr", r.lr}, {"lf", r.lf},
           {"um", r.um}, {"lm", r.lm}};
    if (cfg.macro) {
      j["macro_uf"] = r.macro_uf;
      j["macro_lf"] = r.macro_lf;
    }
    os << j.dump(2) << '\n';
  } else {
    const auto line = [&](const char* name, double value) {
      os << std::left << std::setw(10) << name << std::right << std::setw(8) << percent(value)
         << '\n';
    };
    line("UP", r.up);
    line("UR", r.ur);
    line("UF", r.uf);
    line("LP", r.lp);
    line("LR", r.lr);
    line("LF", r.lf);
    line("UM", r.um);
    line("LM", r.lm);
    if (cfg.macro) {
      line("macro-UF", r.macro_uf);
      line("macro-LF", r.macro_lf);
    }
  }
  output.finish();
  return kOk;
}

int cmd_stats(const Config& cfg, std::istream& in, std::ostream& out, spdlog::logger& log) {
  const auto specs = parse_spec_list(cfg.spec.empty() ? kDefaultVocabSpecs : cfg.spec);
  const CorpusDocument doc = load_corpus(cfg, in, log);
  const CorpusStats s = corpus_stats(doc.sentences, cfg.jobs);
  const auto vocab = vocab_stats(doc.sentences, specs, cfg.jobs);
  const std::size_t shown = std::max<std::size_t>(5, s.plane_histogram.size());

  Output output(cfg.output, out);
  auto& os = output.stream();
  if (cfg.json) {
    Json planes = Json::array();
    for (std::size_t k = 1; k <= shown; ++k) planes.push_back(s.plane_fraction(k));
    Json j{{"sentences", s.sentence_count},
           {"tokens", s.token_count},
           {"arcs", s.arc_count},
           {"zero_arc_sentences", s.zero_arc_sentences},
           {"plane_distribution", planes},
           {"avg_in_degree", s.avg_in_degree()},
           {"avg_out_degree", s.avg_out_degree()},
           {"arcs_per_graph", s.arcs_per_graph()},
           {"avg_length", s.avg_length()},
           {"cycle_sentences", s.cycle_sentences},
           {"cycle_count", s.cycle_count}};
    j["vocab"] = Json::array();
    for (const auto& v : vocab) {
      j["vocab"].push_back({{"spec", v.spec.to_string()},
                            {"labels", v.structural_labels},
                            {"relations", v.relations}});
    }
    os << j.dump(2) << '\n';
  } else {
    os << "sentences  " << s.sentence_count << '\n';
    os << "% planes  ";
    for (std::size_t k = 1; k <= shown; ++k) os << ' ' << k << ':' << percent(s.plane_fraction(k));
    os << '\n';
    os << "h/n        " << fixed2(s.avg_in_degree()) << '\n';
    os << "d/n        " << fixed2(s.avg_out_degree()) << '\n';
    os << "a/g        " << fixed2(s.arcs_per_graph()) << '\n';
    os << "len        " << fixed2(s.avg_length()) << '\n';
    os << "#cycs.     " << s.cycle_count << " (in " << s.cycle_sentences << " sentences)\n";
    os << '\n'
       << std::left << std::setw(8) << "spec" << std::right << std::setw(10) << "labels"
       << std::setw(10) << "rels" << '\n';
    for (const auto& v : vocab) {
      os << std::left << std::setw(8) << v.spec.to_string() << std::right << std::setw(10)
         << v.structural_labels << std::setw(10) << v.relations << '\n';
    }
  }
  output.finish();
  return kOk;
}

int cmd_gen(Config cfg, std::ostream& out) {
  cfg.gen.allow_cycles = !cfg.no_cycles;
  if (cfg.gen.min_length < 1 || cfg.gen.max_length < cfg.gen.min_length) {
    throw std::invalid_argument("need 1 <= --min-length <= --max-length");
  }
  const CorpusDocument doc =
      generate_corpus(cfg.gen, cfg.count, cfg.seed, parse_source_format(cfg.format));
  Output output(cfg.output, out);
  write_corpus(output.stream(), doc);
  output.finish();
  return kOk;
}

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  sink->set_pattern("graphlin: %l: %v");
  auto logger = std::make_shared<spdlog::logger>("graphlin", sink);
  logger->set_level(spdlog::level::warn);
  if (const char* level = std::getenv("GRAPHLIN_LOG")) {
    logger->set_level(spdlog::level::from_str(level));
  }
  return logger;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Config cfg;
  CLI::App app{"Graph linearization toolkit: encode dependency graphs as label sequences.",
               "graphlin"};
  app.require_subcommand(1);

  const auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", cfg.format, "Corpus format")
        ->check(CLI::IsMember({"sdp", "conllu"}))
        ->capture_default_str();
  };
  const auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", cfg.output, "Output path, '-' for stdout")->capture_default_str();
  };
  const auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("-j,--jobs", cfg.jobs, "Worker threads")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1024}))
        ->capture_default_str();
  };
  const auto add_corpus_input = [&](CLI::App* cmd) {
    cmd->add_option("inputs", cfg.inputs, "Corpus files, '-' for stdin")->required();
    cmd->add_flag("--keep-empty-nodes", cfg.keep_empty_nodes,
                  "Fail on CoNLL-U sentences with empty nodes instead of skipping them");
  };

  auto* encode_cmd = app.add_subcommand("encode", "Corpus to label TSV");
  add_corpus_input(encode_cmd);
  encode_cmd->add_option("-s,--spec", cfg.spec, "Encoding, e.g. abs, rel, b:2, b4:3, b6:3 (default b4:3)");
  add_format(encode_cmd);
  add_output(encode_cmd);
  add_jobs(encode_cmd);

  auto* decode_cmd = app.add_subcommand("decode", "Label TSV to corpus");
  decode_cmd->add_option("input", cfg.inputs, "Label file, '-' for stdin")->expected(0, 1);
  decode_cmd->add_option("-s,--spec", cfg.spec, "Expected encoding (default: file header)");
  decode_cmd->add_flag("--strict", cfg.strict, "Exit with status 2 on any ill-formed sentence");
  add_format(decode_cmd);
  add_output(decode_cmd);
  add_jobs(decode_cmd);

  auto* coverage_cmd = app.add_subcommand("coverage", "Oracle F-score (OF) per encoding");
  add_corpus_input(coverage_cmd);
  coverage_cmd->add_option("-s,--spec", cfg.spec, "Comma separated encodings")
      ->default_str(kDefaultCoverageSpecs);
  coverage_cmd->add_flag("--json", cfg.json, "JSON output");
  add_format(coverage_cmd);
  add_output(coverage_cmd);
  add_jobs(coverage_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "Score a predicted corpus against gold");
  eval_cmd->add_option("inputs", cfg.inputs, "GOLD PREDICTED")->required()->expected(2);
  eval_cmd->add_flag("--keep-empty-nodes", cfg.keep_empty_nodes,
                     "Fail on CoNLL-U sentences with empty nodes instead of skipping them");
  eval_cmd->add_flag("--json", cfg.json, "JSON output");
  eval_cmd->add_flag("--macro", cfg.macro, "Also report per-sentence macro averages");
  add_format(eval_cmd);
  add_output(eval_cmd);
  add_jobs(eval_cmd);

  auto* stats_cmd = app.add_subcommand("stats", "Treebank and label vocabulary statistics");
  add_corpus_input(stats_cmd);
  stats_cmd->add_option("-s,--spec", cfg.spec, "Encodings for the vocabulary table")
      ->default_str(kDefaultVocabSpecs);
  stats_cmd->add_flag("--json", cfg.json, "JSON output");
  add_format(stats_cmd);
  add_output(stats_cmd);
  add_jobs(stats_cmd);

  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic corpus");
  gen_cmd->add_option("-n,--count", cfg.count, "Number of sentences")->capture_default_str();
  gen_cmd->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  gen_cmd->add_option("--min-length", cfg.gen.min_length, "Shortest sentence")->capture_default_str();
  gen_cmd->add_option("--max-length", cfg.gen.max_length, "Longest sentence")->capture_default_str();
  gen_cmd->add_option("--density", cfg.gen.max_density, "Maximum arcs per token")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_option("--rightward-bias", cfg.gen.rightward_bias, "Probability of a rightward arc")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--root-prob", cfg.gen.root_probability, "Per-token root arc probability")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  gen_cmd->add_option("--mean-arc-length", cfg.gen.mean_arc_length,
                      "Mean of the geometric arc length, 0 for uniform heads")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  gen_cmd->add_flag("--no-cycles", cfg.no_cycles, "Generate acyclic graphs only");
  add_format(gen_cmd);
  add_output(gen_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  auto logger = make_logger(err);
  try {
    if (*encode_cmd) return cmd_encode(cfg, in, out, err, *logger);
    if (*decode_cmd) return cmd_decode(cfg, in, out, err, *logger);
    if (*coverage_cmd) return cmd_coverage(cfg, in, out, *logger);
    if (*eval_cmd) return cmd_eval(cfg, in, out, *logger);
    if (*stats_cmd) return cmd_stats(cfg, in, out, *logger);
    if (*gen_cmd) return cmd_gen(cfg, out);
  } catch (const IllFormedError& e) {
    err << "graphlin: " << e.what() << '\n';
    return kIllFormed;
  } catch (const std::exception& e) {
    // ParseError already reads "file:line: message".
    err << "graphlin: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

}  // namespace graphlin::cli
