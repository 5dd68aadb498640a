#include "cli.h"

#include <atomic>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "otkit/error.h"
#include "otkit/eval.h"
#include "otkit/file_io.h"
#include "otkit/ingest.h"
#include "otkit/lm.h"
#include "otkit/page_xml.h"
#include "otkit/romanizer.h"
#include "otkit/scheme.h"
#include "otkit/text_direction.h"
#include "otkit/unicode.h"

namespace otkit::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char *kSchemeFile = "ot_alphabet.json";
constexpr const char *kExceptionsFile = "exceptions.tsv";

// Raised for argument combinations CLI11 cannot express; exit status 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string Fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

class Io {
 public:
  Io(std::istream &in, std::ostream &out) : in_(in), out_(out) {}

  std::string Read(const std::string &path) {
    if (!path.empty() && path != "-") return ReadFile(path);
    return std::string(std::istreambuf_iterator<char>(in_), {});
  }

  void Write(const std::string &path, const std::string &data) {
    if (!path.empty() && path != "-") {
      WriteFile(path, data);
    } else {
      out_ << data;
      out_.flush();
    }
  }

 private:
  std::istream &in_;
  std::ostream &out_;
};

std::string JoinLines(const std::vector<std::string> &lines,
                      bool trailing_newline) {
  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (i > 0) out += '\n';
    out += lines[i];
  }
  if (trailing_newline && !lines.empty()) out += '\n';
  return out;
}

bool EndsWithNewline(const std::string &s) {
  return !s.empty() && s.back() == '\n';
}

// Runs fn(i) for i in [0, n) on up to `jobs` threads; exceptions are
// rethrown in index order after all work finishes.
template <typename Fn>
void ParallelFor(std::size_t n, int jobs, Fn fn) {
  std::vector<std::exception_ptr> errors(n);
  auto guarded = [&](std::size_t i) {
    try {
      fn(i);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(1, jobs)), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) guarded(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) guarded(i);
      });
    }
    for (auto &t : pool) t.join();
  }
  for (auto &e : errors)
    if (e) std::rethrow_exception(e);
}

struct SchemeData {
  std::string dir;  // empty: built-in data

  SchemeTable Table() const {
    if (dir.empty()) return SchemeTable::Default();
    return SchemeTable::LoadFile(fs::path(dir) / kSchemeFile);
  }

  ExceptionLexicon Exceptions(const std::string &override_path) const {
    if (!override_path.empty()) return ExceptionLexicon::LoadFile(override_path);
    if (!dir.empty() && fs::exists(fs::path(dir) / kExceptionsFile))
      return ExceptionLexicon::LoadFile(fs::path(dir) / kExceptionsFile);
    return ExceptionLexicon::Default();
  }
};

// ---- reverse ---------------------------------------------------------------

struct ReverseArgs {
  std::string input, output;
  bool mirror_brackets = false;
  bool no_digit_runs = false;
};

void AddReverse(CLI::App &app, ReverseArgs &a) {
  auto *cmd = app.add_subcommand(
      "reverse", "Reverse each line between LTR and RTL storage order");
  cmd->add_option("-i,--input", a.input, "Input file (default: stdin)");
  cmd->add_option("-o,--output", a.output, "Output file (default: stdout)");
  cmd->add_flag("--mirror-brackets", a.mirror_brackets,
                "Swap paired brackets after reversal");
  cmd->add_flag("--no-digit-runs", a.no_digit_runs,
                "Reverse digit runs too");
}

int RunReverse(const ReverseArgs &a, Io &io) {
  std::string text = io.Read(a.input);
  ReversalOptions opts;
  opts.mirror_brackets = a.mirror_brackets;
  opts.preserve_digit_runs = !a.no_digit_runs;
  std::vector<std::string> lines = ReverseDocument(SplitLines(text), opts);
  io.Write(a.output, JoinLines(lines, EndsWithNewline(text)));
  return kOk;
}

// ---- scheme-convert / scheme-validate --------------------------------------

struct ConvertArgs {
  std::string input, output, from = "ia", to = "loose";
};

void AddConvert(CLI::App &app, ConvertArgs &a) {
  auto *cmd = app.add_subcommand("scheme-convert",
                                 "Convert a transcription between schemes");
  cmd->add_option("--from", a.from, "Source scheme")->capture_default_str();
  cmd->add_option("--to", a.to, "Target scheme")->capture_default_str();
  cmd->add_option("-i,--input", a.input, "Input file (default: stdin)");
  cmd->add_option("-o,--output", a.output, "Output file (default: stdout)");
}

int RunConvert(const ConvertArgs &a, const SchemeData &data, Io &io) {
  SchemeTable table = data.Table();
  std::string text = io.Read(a.input);
  io.Write(a.output, ConvertScheme(text, SchemeId::Parse(a.from),
                                   SchemeId::Parse(a.to), table));
  return kOk;
}

struct ValidateArgs {
  std::string input, scheme = "loose";
};

void AddValidate(CLI::App &app, ValidateArgs &a) {
  auto *cmd = app.add_subcommand(
      "scheme-validate", "Report characters outside a transcription scheme");
  cmd->add_option("--scheme", a.scheme, "ia, loose, or a custom scheme name")
      ->capture_default_str();
  cmd->add_option("-i,--input", a.input, "Input file (default: stdin)");
}

int RunValidate(const ValidateArgs &a, const SchemeData &data, Io &io,
                std::ostream &out, std::ostream &err) {
  SchemeTable table = data.Table();
  std::string text = io.Read(a.input);
  auto diags = ValidateSchemeText(text, SchemeId::Parse(a.scheme), table);
  for (const SchemeDiagnostic &d : diags) {
    char cp[16];
    std::snprintf(cp, sizeof cp, "U+%04X",
                  static_cast<unsigned>(DecodeUtf8(d.grapheme).front()));
    out << d.line << ':' << d.column << '\t' << d.grapheme << '\t' << cp
        << '\n';
  }
  if (!diags.empty()) {
    err << diags.size() << " character(s) outside scheme '" << a.scheme
        << "'\n";
    return kDataError;
  }
  return kOk;
}

// ---- romanize ----------------------------------------------------------------

struct RomanizeArgs {
  std::string input, output, lexicon, exceptions, model;
  double alpha = RescoreConfig{}.alpha;
  std::optional<std::size_t> max_insertions;
  std::size_t beam = GenLimits{}.beam;
  std::size_t max_candidates = GenLimits{}.max_candidates;
  std::size_t nbest = 0;
};

void AddRomanize(CLI::App &app, RomanizeArgs &a) {
  auto *cmd = app.add_subcommand(
      "romanize", "Romanize Ottoman Turkish words into Modern Turkish");
  cmd->add_option("-i,--input", a.input, "Input file (default: stdin)");
  cmd->add_option("-o,--output", a.output, "Output file (default: stdout)");
  cmd->add_option("--lexicon", a.lexicon, "Lexicon TSV")
      ->check(CLI::ExistingFile);
  cmd->add_option("--exceptions", a.exceptions,
                  "Conventional spellings TSV (default: built-in list)")
      ->check(CLI::ExistingFile);
  auto *model = cmd->add_option("--model", a.model, "N-gram model JSON")
                    ->check(CLI::ExistingFile);
  cmd->add_option("--alpha", a.alpha,
                  "Generation-score weight in [0, 1] for LM rescoring")
      ->check(CLI::Range(0.0, 1.0))
      ->needs(model)
      ->capture_default_str();
  cmd->add_option("--max-insertions", a.max_insertions,
                  "Vowel insertions per word (default: ceil(letters / 2))");
  cmd->add_option("--beam", a.beam, "Beam width during generation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--max-candidates", a.max_candidates,
                  "Candidates kept per word")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--nbest", a.nbest,
                  "List the top N candidates per word as TSV instead of text");
}

int RunRomanize(const RomanizeArgs &a, const SchemeData &data, Io &io) {
  SchemeTable table = data.Table();
  ExceptionLexicon exceptions = data.Exceptions(a.exceptions);
  Lexicon lexicon = a.lexicon.empty() ? Lexicon() : Lexicon::LoadFile(a.lexicon);
  std::optional<NgramModel> model;
  if (!a.model.empty()) model = NgramModel::LoadFile(a.model);

  RomanizeOptions opts;
  opts.limits.max_insertions = a.max_insertions;
  opts.limits.beam = a.beam;
  opts.limits.max_candidates = a.max_candidates;
  opts.rescore.alpha = a.alpha;

  const std::string text = io.Read(a.input);
  std::ostringstream out;
  if (a.nbest > 0) out << "word\trank\tsurface\tgen\tlm\ttotal\n";
  for (const std::string &line : SplitLines(text)) {
    std::vector<std::string> romanized;
    std::vector<std::string> history;
    for (const std::string &token : SplitWhitespace(line)) {
      // Peel punctuation and digits off both ends of the token.
      std::vector<std::string> g = Graphemes(token);
      std::size_t b = 0, e = g.size();
      while (b < e && IsNeutralGrapheme(g[b])) ++b;
      while (e > b && IsNeutralGrapheme(g[e - 1])) --e;
      std::string prefix, core, suffix;
      for (std::size_t i = 0; i < g.size(); ++i)
        (i < b ? prefix : i < e ? core : suffix) += g[i];
      if (core.empty()) {
        romanized.push_back(token);
        continue;
      }
      std::vector<Candidate> cands =
          Romanize(OtWord::Parse(core, table), table, lexicon, exceptions,
                   model ? &*model : nullptr, opts, history);
      for (std::size_t r = 0; r < cands.size() && r < a.nbest; ++r) {
        const Candidate &c = cands[r];
        out << core << '\t' << r + 1 << '\t' << c.surface << '\t'
            << Fixed(c.gen_score) << '\t' << Fixed(c.lm_score) << '\t'
            << Fixed(c.total) << '\n';
      }
      romanized.push_back(prefix + cands.front().surface + suffix);
      history.push_back(cands.front().surface);
    }
    if (a.nbest == 0) {
      for (std::size_t i = 0; i < romanized.size(); ++i)
        out << (i ? " " : "") << romanized[i];
      out << '\n';
    }
  }
  io.Write(a.output, out.str());
  return kOk;
}

// ---- lm-train / lm-score -----------------------------------------------------

struct TrainArgs {
  std::string input, output;
  NgramOptions options;
  int jobs = 1;
};

void AddTrain(CLI::App &app, TrainArgs &a) {
  auto *cmd =
      app.add_subcommand("lm-train", "Train a word n-gram model on MT text");
  cmd->add_option("-i,--input", a.input, "Training text (default: stdin)");
  cmd->add_option("-o,--output", a.output, "Model JSON (default: stdout)");
  cmd->add_option("--order", a.options.order, "Word n-gram order")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--char-order", a.options.char_order,
                  "Character n-gram order for unknown words")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("-k,--add-k", a.options.k, "Add-k smoothing constant")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--backoff-weight", a.options.backoff_weight,
                  "Weight of the character model for unknown words")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  cmd->add_option("-j,--jobs", a.jobs, "Counting threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int RunTrain(const TrainArgs &a, Io &io) {
  std::vector<std::string> lines = SplitLines(io.Read(a.input));
  NgramModel model = NgramModel::TrainParallel(lines, a.options, a.jobs);
  io.Write(a.output, model.ToJson());
  return kOk;
}

struct ScoreArgs {
  std::string input, output, model;
  bool perplexity = false;
};

void AddScore(CLI::App &app, ScoreArgs &a) {
  auto *cmd = app.add_subcommand(
      "lm-score", "Print the natural-log probability of each line");
  cmd->add_option("--model", a.model, "Model JSON")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("-i,--input", a.input, "Text to score (default: stdin)");
  cmd->add_option("-o,--output", a.output, "Output file (default: stdout)");
  cmd->add_flag("--perplexity", a.perplexity,
                "Print corpus perplexity instead of per-line scores");
}

int RunScore(const ScoreArgs &a, Io &io) {
  NgramModel model = NgramModel::LoadFile(a.model);
  std::vector<std::string> lines = SplitLines(io.Read(a.input));
  std::string out;
  if (a.perplexity) {
    out = Fixed(Perplexity(model, lines)) + "\n";
  } else {
    for (const std::string &line : lines) {
      if (!SplitWhitespace(line).empty()) out += Fixed(model.ScoreText(line));
      out += '\n';
    }
  }
  io.Write(a.output, out);
  return kOk;
}

// ---- eval --------------------------------------------------------------------

struct EvalArgs {
  std::string ref, hyp, manifest, report = "table", output;
  int jobs = 1;
};

void AddEval(CLI::App &app, EvalArgs &a) {
  auto *cmd = app.add_subcommand(
      "eval", "Character and word error rates of hypotheses against references");
  auto *ref = cmd->add_option("--ref", a.ref, "Reference file or directory")
                  ->check(CLI::ExistingPath);
  auto *manifest =
      cmd->add_option("--manifest", a.manifest,
                      "Corpus manifest; its transcripts are the references")
          ->check(CLI::ExistingFile);
  ref->excludes(manifest);
  cmd->add_option("--hyp", a.hyp, "Hypothesis file or directory")
      ->required()
      ->check(CLI::ExistingPath);
  cmd->add_option("--report", a.report, "Report format")
      ->check(CLI::IsMember({"table", "csv"}))
      ->capture_default_str();
  cmd->add_option("-o,--output", a.output, "Report file (default: stdout)");
  cmd->add_option("-j,--jobs", a.jobs, "Documents evaluated in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

DocumentInput LoadDocument(const fs::path &ref, const fs::path &hyp,
                           DocumentMeta meta) {
  if (!fs::is_regular_file(hyp))
    throw Error(ErrorCode::kIo, "no hypothesis file " + hyp.string());
  DocumentInput doc;
  doc.meta = std::move(meta);
  doc.ref_lines = TranscriptLines(ReadFile(ref));
  doc.hyp_lines = TranscriptLines(ReadFile(hyp));
  return doc;
}

int RunEval(const EvalArgs &a, Io &io, std::ostream &err) {
  if (a.ref.empty() && a.manifest.empty())
    throw UsageError("eval needs --ref or --manifest");
  std::vector<DocumentInput> docs;
  const fs::path hyp(a.hyp);
  if (!a.manifest.empty()) {
    if (!fs::is_directory(hyp))
      throw UsageError("--hyp must be a directory when --manifest is given");
    CorpusManifest m = LoadManifest(a.manifest);
    for (const ManifestEntry &e : m.entries) {
      fs::path ref = m.Resolve(e.transcript);
      docs.push_back(LoadDocument(ref, hyp / ref.filename(), e.meta));
    }
  } else if (fs::is_directory(a.ref)) {
    if (!fs::is_directory(hyp))
      throw UsageError("--ref and --hyp must both be files or directories");
    std::vector<fs::path> refs;
    for (const auto &entry : fs::directory_iterator(a.ref))
      if (entry.is_regular_file()) refs.push_back(entry.path());
    std::sort(refs.begin(), refs.end());
    for (const fs::path &ref : refs)
      docs.push_back(LoadDocument(ref, hyp / ref.filename(),
                                  {ref.stem().string(), "", ""}));
  } else {
    if (fs::is_directory(hyp))
      throw UsageError("--ref and --hyp must both be files or directories");
    docs.push_back(
        LoadDocument(a.ref, hyp, {fs::path(a.ref).stem().string(), "", ""}));
  }
  if (docs.empty()) throw Error(ErrorCode::kEmptyReference, "no documents");

  EvalReport report = CorpusReport(docs, a.jobs);
  io.Write(a.output, a.report == "csv" ? report.RenderCsv()
                                       : report.RenderTable());
  int status = kOk;
  for (const ReportRow &row : report.rows) {
    if (!row.error) continue;
    err << "excluded " << row.meta.name << ": " << *row.error << '\n';
    status = kDataError;
  }
  return status;
}

// ---- prepare -----------------------------------------------------------------

struct PrepareArgs {
  std::string manifest, output;
  bool no_reverse = false;
  bool mirror_brackets = false;
  int jobs = 1;
};

void AddPrepare(CLI::App &app, PrepareArgs &a) {
  auto *cmd = app.add_subcommand(
      "prepare",
      "Pair transcripts with PAGE lines and export (reversed) training data");
  cmd->add_option("--manifest", a.manifest, "Corpus manifest")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("-o,--output", a.output, "Output directory")->required();
  cmd->add_flag("--no-reverse", a.no_reverse,
                "Keep transcripts left-to-right");
  cmd->add_flag("--mirror-brackets", a.mirror_brackets,
                "Swap paired brackets when reversing");
  cmd->add_option("-j,--jobs", a.jobs, "Pages processed in parallel")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int RunPrepare(const PrepareArgs &a, const SchemeData &data,
               std::ostream &out, std::ostream &err) {
  CorpusManifest m = LoadManifest(a.manifest);
  if (m.entries.empty())
    throw Error(ErrorCode::kEmptyManifest, "manifest has no entries");
  std::map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < m.entries.size(); ++i) {
    std::string base = fs::path(m.entries[i].page).stem().string();
    if (!seen.emplace(base, i).second)
      throw Error(ErrorCode::kMalformedData,
                  "two manifest entries export to '" + base + "'");
  }
  SchemeTable table = data.Table();
  ReversalOptions opts;
  opts.mirror_brackets = a.mirror_brackets;

  struct Result {
    std::vector<std::string> warnings;
    ExportedFiles files;
  };
  std::vector<Result> results(m.entries.size());
  ParallelFor(m.entries.size(), a.jobs, [&](std::size_t i) {
    const ManifestEntry &e = m.entries[i];
    Result &r = results[i];
    PageDocument page = LoadPageXml(m.Resolve(e.page), &r.warnings);
    std::string transcript = ReadFile(m.Resolve(e.transcript));
    auto diags = ValidateSchemeText(transcript, e.scheme, table);
    if (!diags.empty())
      r.warnings.push_back(std::to_string(diags.size()) +
                           " character(s) outside scheme '" + e.scheme.name() +
                           "'");
    std::vector<PairedLine> pairs;
    try {
      pairs = PairGroundTruth(page, TranscriptLines(transcript));
    } catch (const LineCountMismatch &mismatch) {
      throw LineCountMismatch(mismatch.expected(), mismatch.actual(), e.page);
    }
    r.files = ExportTrainingPairs(pairs, !a.no_reverse, a.output,
                                  fs::path(e.page).stem().string(), &page,
                                  opts);
  });
  for (std::size_t i = 0; i < results.size(); ++i) {
    for (const std::string &w : results[i].warnings)
      err << m.entries[i].page << ": " << w << '\n';
    out << results[i].files.transcript.filename().string() << '\n';
    if (results[i].files.page_xml)
      out << results[i].files.page_xml->filename().string() << '\n';
  }
  return kOk;
}

// ---- split -------------------------------------------------------------------

struct SplitArgs {
  std::string manifest, output, ratios = "0.8,0.1,0.1";
  std::optional<std::uint64_t> seed;
};

void AddSplit(CLI::App &app, SplitArgs &a) {
  auto *cmd = app.add_subcommand(
      "split", "Assign manifest entries to train/val/test reproducibly");
  cmd->add_option("--manifest", a.manifest, "Corpus manifest")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--ratios", a.ratios, "train,val,test fractions")
      ->capture_default_str();
  cmd->add_option("--seed", a.seed,
                  "Shuffle seed (default: the manifest's seed)");
  cmd->add_option("-o,--output", a.output,
                  "Write the labelled manifest here (default: stdout)");
}

SplitRatios ParseRatios(const std::string &text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception &) {
      throw UsageError("--ratios: '" + part + "' is not a number");
    }
  }
  if (v.size() != 3) throw UsageError("--ratios needs three values");
  return {v[0], v[1], v[2]};
}

int RunSplit(const SplitArgs &a, Io &io, std::ostream &err) {
  SplitRatios ratios = ParseRatios(a.ratios);
  CorpusManifest m = LoadManifest(a.manifest);
  std::optional<std::uint64_t> seed = a.seed ? a.seed : m.seed;
  if (!seed) throw UsageError("split needs --seed (the manifest has none)");
  m = SplitCorpus(std::move(m), ratios, *seed);

  if (!a.output.empty()) {
    // Keep entry paths valid relative to the new manifest's directory.
    const fs::path from = fs::absolute(m.base_dir);
    const fs::path to = fs::absolute(a.output).parent_path();
    for (ManifestEntry &e : m.entries) {
      for (std::string *p : {&e.page, &e.transcript}) {
        if (fs::path(*p).is_absolute()) continue;
        *p = (from / *p).lexically_normal().lexically_relative(to)
                 .generic_string();
      }
    }
  }
  std::map<SplitLabel, std::size_t> counts;
  for (const ManifestEntry &e : m.entries) ++counts[*e.split];
  err << "train " << counts[SplitLabel::kTrain] << ", val "
      << counts[SplitLabel::kVal] << ", test " << counts[SplitLabel::kTest]
      << '\n';
  io.Write(a.output, ManifestToJson(m));
  return kOk;
}

}  // namespace

int Run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  CLI::App app("Ottoman Turkish ground-truth toolkit", "otkit");
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  app.set_version_flag("--version", "otkit 0.1.0");

  SchemeData data;
  app.add_option("--scheme-dir", data.dir,
                 "Directory holding ot_alphabet.json (and exceptions.tsv)")
      ->envname("OTKIT_SCHEME_DIR")
      ->check(CLI::ExistingDirectory);

  ReverseArgs reverse_args;
  ConvertArgs convert_args;
  ValidateArgs validate_args;
  RomanizeArgs romanize_args;
  TrainArgs train_args;
  ScoreArgs score_args;
  EvalArgs eval_args;
  PrepareArgs prepare_args;
  SplitArgs split_args;
  AddReverse(app, reverse_args);
  AddConvert(app, convert_args);
  AddValidate(app, validate_args);
  AddRomanize(app, romanize_args);
  AddTrain(app, train_args);
  AddScore(app, score_args);
  AddEval(app, eval_args);
  AddPrepare(app, prepare_args);
  AddSplit(app, split_args);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    app.exit(e, err, err);
    return kUsage;
  }

  Io io(in, out);
  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    if (cmd == "reverse") return RunReverse(reverse_args, io);
    if (cmd == "scheme-convert") return RunConvert(convert_args, data, io);
    if (cmd == "scheme-validate")
      return RunValidate(validate_args, data, io, out, err);
    if (cmd == "romanize") return RunRomanize(romanize_args, data, io);
    if (cmd == "lm-train") return RunTrain(train_args, io);
    if (cmd == "lm-score") return RunScore(score_args, io);
    if (cmd == "eval") return RunEval(eval_args, io, err);
    if (cmd == "prepare") return RunPrepare(prepare_args, data, out, err);
    if (cmd == "split") return RunSplit(split_args, io, err);
  } catch (const UsageError &e) {
    err << "otkit " << cmd << ": " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception &e) {
    err << "otkit " << cmd << ": " << e.what() << '\n';
    return kDataError;
  }
  return kUsage;
}

}  // namespace otkit::cli
