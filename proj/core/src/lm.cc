#include "otkit/lm.h"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include <json.hpp>

#include "otkit/error.h"
#include "otkit/file_io.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

using nlohmann::json;

constexpr int kFormatVersion = 1;

void ValidateOptions(const NgramOptions &o) {
  if (o.order < 1)
    throw Error(ErrorCode::kInvalidArgument, "order must be >= 1");
  if (o.char_order < 1)
    throw Error(ErrorCode::kInvalidArgument, "char order must be >= 1");
  if (!(o.k > 0.0) || !std::isfinite(o.k))
    throw Error(ErrorCode::kInvalidArgument, "k must be positive");
  if (!(o.backoff_weight > 0.0 && o.backoff_weight < 1.0))
    throw Error(ErrorCode::kInvalidArgument, "backoff weight must be in (0,1)");
}

// Add-k estimate over |vocab| + 1 outcomes.
double AddK(std::uint64_t count, std::uint64_t total, double k,
            std::size_t vocab_size) {
  return (static_cast<double>(count) + k) /
         (static_cast<double>(total) + k * static_cast<double>(vocab_size + 1));
}

json CountsToJson(const NgramCounts &counts) {
  json rows = json::array();
  for (const auto &[history, next] : counts.table)
    for (const auto &[symbol, c] : next)
      rows.push_back(json::array({history, symbol, c}));
  return rows;
}

NgramCounts CountsFromJson(const json &rows, std::size_t history_len,
                           const char *what) {
  if (!rows.is_array())
    throw Error(ErrorCode::kMalformedData, std::string(what) + " must be an array");
  NgramCounts counts;
  for (const auto &row : rows) {
    if (!row.is_array() || row.size() != 3 || !row[0].is_array() ||
        !row[1].is_string() || !row[2].is_number_unsigned())
      throw Error(ErrorCode::kMalformedData,
                  std::string(what) + " rows are [history, symbol, count]");
    auto history = row[0].get<std::vector<std::string>>();
    if (history.size() != history_len)
      throw Error(ErrorCode::kMalformedData,
                  std::string(what) + " history has the wrong length");
    auto c = row[2].get<std::uint64_t>();
    if (c == 0)
      throw Error(ErrorCode::kMalformedData,
                  std::string(what) + " counts must be >= 1");
    counts.Add(history, row[1].get<std::string>(), c);
  }
  return counts;
}

}  // namespace

void NgramCounts::Add(const std::vector<std::string> &history,
                      const std::string &symbol, std::uint64_t count) {
  table[history][symbol] += count;
}

void NgramCounts::Merge(const NgramCounts &other) {
  for (const auto &[history, next] : other.table)
    for (const auto &[symbol, c] : next) table[history][symbol] += c;
}

std::uint64_t NgramCounts::HistoryTotal(
    const std::vector<std::string> &history) const {
  auto it = table.find(history);
  if (it == table.end()) return 0;
  std::uint64_t total = 0;
  for (const auto &[symbol, c] : it->second) total += c;
  return total;
}

std::uint64_t NgramCounts::Count(const std::vector<std::string> &history,
                                 const std::string &symbol) const {
  auto it = table.find(history);
  if (it == table.end()) return 0;
  auto jt = it->second.find(symbol);
  return jt == it->second.end() ? 0 : jt->second;
}

void CountLines(std::span<const std::string> lines, const NgramOptions &options,
                NgramCounts &word_counts, NgramCounts &char_counts,
                std::set<std::string> &vocab,
                std::set<std::string> &char_vocab) {
  const std::size_t wh = static_cast<std::size_t>(options.order - 1);
  const std::size_t ch = static_cast<std::size_t>(options.char_order - 1);
  for (const std::string &line : lines) {
    std::vector<std::string> tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;
    std::vector<std::string> padded(wh, std::string(kBosToken));
    padded.insert(padded.end(), tokens.begin(), tokens.end());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      std::vector<std::string> history(padded.begin() + i,
                                       padded.begin() + i + wh);
      word_counts.Add(history, tokens[i]);
      vocab.insert(tokens[i]);

      std::vector<std::string> chars(ch, std::string(kBowSymbol));
      for (auto &g : GraphemesOfNormalized(tokens[i])) chars.push_back(g);
      chars.emplace_back(kEowSymbol);
      for (std::size_t j = ch; j < chars.size(); ++j) {
        std::vector<std::string> chist(chars.begin() + (j - ch),
                                       chars.begin() + j);
        char_counts.Add(chist, chars[j]);
        char_vocab.insert(chars[j]);
      }
    }
  }
}

NgramModel NgramModel::FromCounts(NgramCounts word_counts,
                                  NgramCounts char_counts,
                                  std::set<std::string> vocab,
                                  std::set<std::string> char_vocab,
                                  const NgramOptions &options) {
  if (vocab.empty())
    throw Error(ErrorCode::kEmptyCorpus, "corpus contains no tokens");
  NgramModel m;
  m.options_ = options;
  m.word_counts_ = std::move(word_counts);
  m.char_counts_ = std::move(char_counts);
  m.vocab_ = std::move(vocab);
  m.char_vocab_ = std::move(char_vocab);
  return m;
}

NgramModel NgramModel::Train(std::span<const std::string> lines,
                             const NgramOptions &options) {
  ValidateOptions(options);
  NgramCounts wc, cc;
  std::set<std::string> vocab, char_vocab;
  CountLines(lines, options, wc, cc, vocab, char_vocab);
  return FromCounts(std::move(wc), std::move(cc), std::move(vocab),
                    std::move(char_vocab), options);
}

NgramModel NgramModel::TrainParallel(std::span<const std::string> lines,
                                     const NgramOptions &options, int jobs) {
  ValidateOptions(options);
  const std::size_t shards = static_cast<std::size_t>(std::max(1, jobs));
  struct Partial {
    NgramCounts wc, cc;
    std::set<std::string> vocab, char_vocab;
  };
  std::vector<std::future<Partial>> futures;
  const std::size_t per = (lines.size() + shards - 1) / shards;
  for (std::size_t s = 0; s < shards; ++s) {
    std::size_t begin = std::min(lines.size(), s * per);
    std::size_t end = std::min(lines.size(), begin + per);
    auto shard = lines.subspan(begin, end - begin);
    futures.push_back(std::async(std::launch::async, [shard, &options] {
      Partial p;
      CountLines(shard, options, p.wc, p.cc, p.vocab, p.char_vocab);
      return p;
    }));
  }
  Partial total;
  for (auto &f : futures) {
    Partial p = f.get();
    total.wc.Merge(p.wc);
    total.cc.Merge(p.cc);
    total.vocab.merge(p.vocab);
    total.char_vocab.merge(p.char_vocab);
  }
  return FromCounts(std::move(total.wc), std::move(total.cc),
                    std::move(total.vocab), std::move(total.char_vocab),
                    options);
}

bool NgramModel::InVocab(std::string_view word) const {
  return vocab_.count(std::string(word)) > 0;
}

std::vector<std::string> NgramModel::MapHistory(
    std::span<const std::string> history, std::size_t length) const {
  std::vector<std::string> out(length, std::string(kBosToken));
  const std::size_t take = std::min(length, history.size());
  for (std::size_t i = 0; i < take; ++i) {
    const std::string &w = history[history.size() - take + i];
    out[length - take + i] =
        (w == kBosToken || InVocab(w)) ? w : std::string(kUnkToken);
  }
  return out;
}

double NgramModel::Prob(std::span<const std::string> history,
                        std::string_view word) const {
  if (word != kUnkToken && !InVocab(word)) return std::exp(LogProb(history, word));
  auto h = MapHistory(history, static_cast<std::size_t>(options_.order - 1));
  // <unk> is never stored, so its count is zero.
  std::uint64_t c = word == kUnkToken ? 0 : word_counts_.Count(h, std::string(word));
  return AddK(c, word_counts_.HistoryTotal(h), options_.k, vocab_.size());
}

double NgramModel::CharLogProb(std::string_view word) const {
  const std::size_t ch = static_cast<std::size_t>(options_.char_order - 1);
  std::vector<std::string> chars(ch, std::string(kBowSymbol));
  for (auto &g : Graphemes(word))
    chars.push_back(char_vocab_.count(g) ? g : std::string(kUnkToken));
  chars.emplace_back(kEowSymbol);
  double lp = 0.0;
  for (std::size_t j = ch; j < chars.size(); ++j) {
    std::vector<std::string> hist(chars.begin() + (j - ch), chars.begin() + j);
    std::uint64_t c = chars[j] == kUnkToken ? 0 : char_counts_.Count(hist, chars[j]);
    lp += std::log(AddK(c, char_counts_.HistoryTotal(hist), options_.k,
                        char_vocab_.size()));
  }
  return lp;
}

double NgramModel::LogProb(std::span<const std::string> history,
                           std::string_view word) const {
  if (word == kUnkToken || InVocab(word)) return std::log(Prob(history, word));
  return std::log(Prob(history, kUnkToken)) +
         std::log(options_.backoff_weight) + CharLogProb(word);
}

double NgramModel::Score(std::span<const std::string> tokens) const {
  if (tokens.empty())
    throw Error(ErrorCode::kInvalidArgument, "cannot score an empty sequence");
  double total = 0.0;
  for (std::size_t i = 0; i < tokens.size(); ++i)
    total += LogProb(tokens.first(i), tokens[i]);
  return total;
}

double NgramModel::ScoreText(std::string_view line) const {
  std::vector<std::string> tokens = SplitWhitespace(line);
  return Score(tokens);
}

std::string NgramModel::ToJson() const {
  json doc;
  doc["format"] = "otkit-ngram";
  doc["version"] = kFormatVersion;
  doc["order"] = options_.order;
  doc["char_order"] = options_.char_order;
  doc["k"] = options_.k;
  doc["backoff_weight"] = options_.backoff_weight;
  doc["vocab"] = vocab_;
  doc["char_vocab"] = char_vocab_;
  doc["counts"] = CountsToJson(word_counts_);
  doc["char_counts"] = CountsToJson(char_counts_);
  return doc.dump(1) + "\n";
}

NgramModel NgramModel::FromJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw Error(ErrorCode::kMalformedData, std::string("model: ") + e.what());
  }
  try {
    if (doc.at("format") != "otkit-ngram")
      throw Error(ErrorCode::kMalformedData, "model: not an otkit-ngram file");
    if (doc.at("version") != kFormatVersion)
      throw Error(ErrorCode::kMalformedData, "model: unsupported version");
    NgramOptions opts;
    opts.order = doc.at("order").get<int>();
    opts.char_order = doc.at("char_order").get<int>();
    opts.k = doc.at("k").get<double>();
    opts.backoff_weight = doc.at("backoff_weight").get<double>();
    ValidateOptions(opts);
    auto vocab = doc.at("vocab").get<std::set<std::string>>();
    auto char_vocab = doc.at("char_vocab").get<std::set<std::string>>();
    NgramCounts wc = CountsFromJson(doc.at("counts"),
                                    static_cast<std::size_t>(opts.order - 1),
                                    "counts");
    NgramCounts cc = CountsFromJson(doc.at("char_counts"),
                                    static_cast<std::size_t>(opts.char_order - 1),
                                    "char_counts");
    return FromCounts(std::move(wc), std::move(cc), std::move(vocab),
                      std::move(char_vocab), opts);
  } catch (const json::exception &e) {
    throw Error(ErrorCode::kMalformedData, std::string("model: ") + e.what());
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kMalformedData) throw;
    throw Error(ErrorCode::kMalformedData, std::string("model: ") + e.what());
  }
}

NgramModel NgramModel::LoadFile(const std::filesystem::path &path) {
  return FromJson(ReadFile(path));
}

void NgramModel::SaveFile(const std::filesystem::path &path) const {
  WriteFile(path, ToJson());
}

double Perplexity(const NgramModel &model, std::span<const std::string> lines) {
  double log_sum = 0.0;
  std::size_t n = 0;
  for (const std::string &line : lines) {
    std::vector<std::string> tokens = SplitWhitespace(line);
    if (tokens.empty()) continue;
    log_sum += model.Score(tokens);
    n += tokens.size();
  }
  if (n == 0) throw Error(ErrorCode::kEmptyCorpus, "no tokens to evaluate");
  return std::exp(-log_sum / static_cast<double>(n));
}

void RankCandidates(std::vector<Candidate> &candidates) {
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const Candidate &a, const Candidate &b) {
                     if (a.total != b.total) return a.total > b.total;
                     return a.surface < b.surface;
                   });
}

std::vector<Candidate> Rescore(std::vector<Candidate> candidates,
                               const NgramModel &model,
                               const RescoreConfig &config,
                               std::span<const std::string> history) {
  if (!(config.alpha >= 0.0 && config.alpha <= 1.0))
    throw Error(ErrorCode::kInvalidArgument, "alpha must be in [0,1]");
  for (Candidate &c : candidates) {
    c.lm_score = model.LogProb(history, c.surface);
    c.total = config.alpha * c.gen_score + (1.0 - config.alpha) * c.lm_score;
  }
  RankCandidates(candidates);
  return candidates;
}

}  // namespace otkit
