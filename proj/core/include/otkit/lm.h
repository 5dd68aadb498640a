// Add-k smoothed word n-gram model with a character n-gram model for
// out-of-vocabulary words.
//
// For a history h of n-1 words (sentence starts padded with <s>):
//
//   P(w | h) = (c(h, w) + k) / (c(h) + k * (|V| + 1))
//
// summed over V and the single <unk> class this is exactly one. An
// out-of-vocabulary word w takes the <unk> mass scaled by the backoff weight
// and spread by the character model:
//
//   P(w | h) = P(<unk> | h) * lambda * Pchar(w)
//
// Pchar is the same add-k estimator over graphemes of order m, with
// word-boundary padding and an end-of-word symbol, so unseen inflections that
// reuse seen character sequences get useful probability.
//
// Tokens are whitespace-split after NFC; punctuation stays attached.

#ifndef OTKIT_LM_H_
#define OTKIT_LM_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otkit/candidate.h"

namespace otkit {

inline constexpr std::string_view kUnkToken = "<unk>";
inline constexpr std::string_view kBosToken = "<s>";
inline constexpr std::string_view kBowSymbol = "<w>";
inline constexpr std::string_view kEowSymbol = "</w>";

// (history, next symbol) -> count. Counts form a commutative monoid under
// Merge, so partial counts from any partition of a corpus add up to the same
// table.
struct NgramCounts {
  std::map<std::vector<std::string>, std::map<std::string, std::uint64_t>>
      table;

  void Add(const std::vector<std::string> &history, const std::string &symbol,
           std::uint64_t count = 1);
  void Merge(const NgramCounts &other);
  std::uint64_t HistoryTotal(const std::vector<std::string> &history) const;
  std::uint64_t Count(const std::vector<std::string> &history,
                      const std::string &symbol) const;

  bool operator==(const NgramCounts &) const = default;
};

struct NgramOptions {
  int order = 2;
  int char_order = 3;
  double k = 0.1;
  double backoff_weight = 0.5;

  bool operator==(const NgramOptions &) const = default;
};

class NgramModel {
 public:
  // Throws EmptyCorpus when the corpus has no tokens, InvalidArgument for
  // out-of-range options.
  static NgramModel Train(std::span<const std::string> lines,
                          const NgramOptions &options = {});
  // Counts line shards on `jobs` threads and merges; identical to Train.
  static NgramModel TrainParallel(std::span<const std::string> lines,
                                  const NgramOptions &options, int jobs);

  static NgramModel FromJson(std::string_view json_text);
  static NgramModel LoadFile(const std::filesystem::path &path);
  std::string ToJson() const;
  void SaveFile(const std::filesystem::path &path) const;

  // P(word | history) for word in vocab or word == <unk>. Histories shorter
  // than order - 1 are left-padded with <s>; longer ones are truncated.
  double Prob(std::span<const std::string> history,
              std::string_view word) const;
  // Natural log of the conditional probability; out-of-vocabulary words go
  // through the character model. Always finite.
  double LogProb(std::span<const std::string> history,
                 std::string_view word) const;
  // Natural log of Pchar(word).
  double CharLogProb(std::string_view word) const;

  // Sum of per-token log probabilities with sentence-start padding.
  // Throws InvalidArgument for an empty token sequence.
  double Score(std::span<const std::string> tokens) const;
  double ScoreText(std::string_view line) const;

  bool InVocab(std::string_view word) const;

  int order() const { return options_.order; }
  int char_order() const { return options_.char_order; }
  double k() const { return options_.k; }
  double backoff_weight() const { return options_.backoff_weight; }
  const std::set<std::string> &vocab() const { return vocab_; }
  const NgramCounts &word_counts() const { return word_counts_; }
  const NgramCounts &char_counts() const { return char_counts_; }
  const std::set<std::string> &char_vocab() const { return char_vocab_; }

  bool operator==(const NgramModel &) const = default;

 private:
  static NgramModel FromCounts(NgramCounts word_counts, NgramCounts char_counts,
                               std::set<std::string> vocab,
                               std::set<std::string> char_vocab,
                               const NgramOptions &options);
  std::vector<std::string> MapHistory(std::span<const std::string> history,
                                      std::size_t length) const;

  NgramOptions options_;
  NgramCounts word_counts_;
  NgramCounts char_counts_;
  std::set<std::string> vocab_;
  std::set<std::string> char_vocab_;  // graphemes plus </w>
};

// Counts contributed by a set of lines; exposed for parallel training.
void CountLines(std::span<const std::string> lines, const NgramOptions &options,
                NgramCounts &word_counts, NgramCounts &char_counts,
                std::set<std::string> &vocab, std::set<std::string> &char_vocab);

// exp(-mean log P) over all tokens of all lines. Throws EmptyCorpus.
double Perplexity(const NgramModel &model, std::span<const std::string> lines);

struct RescoreConfig {
  // Weight of the generation score against the LM score.
  double alpha = 0.5;
};

// Sets lm_score to the model log probability of each surface (as a single
// token after `history`) and total = alpha * gen + (1 - alpha) * lm, then
// sorts by total descending with ties broken by surface.
std::vector<Candidate> Rescore(std::vector<Candidate> candidates,
                               const NgramModel &model,
                               const RescoreConfig &config = {},
                               std::span<const std::string> history = {});

// Orders by total descending, then surface ascending (stable).
void RankCandidates(std::vector<Candidate> &candidates);

}  // namespace otkit

#endif  // OTKIT_LM_H_
