// Candidate romanization of Ottoman Turkish words.
//
// Generation substitutes each OT letter with one of its table alternatives
// and may supply an unwritten vowel between two consonant realizations or
// after a final consonant. Every generated candidate is character-accurate:
// dropping the inserted vowels and reading each remaining trace step back
// through the table recovers the OT word.
//
// The generation prior of a candidate is
//   prod over substitutions of 1 / (rank + 1)  *  0.5 ^ (inserted vowels)
// stored as a natural log in Candidate::gen_score.

#ifndef OTKIT_ROMANIZER_H_
#define OTKIT_ROMANIZER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otkit/candidate.h"
#include "otkit/lexicon.h"
#include "otkit/lm.h"
#include "otkit/scheme.h"

namespace otkit {

// An OT word as a sequence of single-code-point letters in reading order,
// NFC, aliases left as written.
class OtWord {
 public:
  // Throws UnknownLetter for any code point outside the table and
  // InvalidArgument for empty input.
  static OtWord Parse(std::string_view text, const SchemeTable &table);

  const std::vector<std::string> &letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  std::string str() const;

 private:
  std::vector<std::string> letters_;
};

struct GenLimits {
  // Unset means ceil(letters / 2).
  std::optional<std::size_t> max_insertions;
  std::size_t beam = 500;
  std::size_t max_candidates = 50;

  std::size_t InsertionsFor(const OtWord &word) const;
};

struct GenerationResult {
  // Sorted by gen_score descending, then surface ascending; unique surfaces.
  std::vector<Candidate> candidates;
  // Set when the beam discarded hypotheses.
  bool truncated = false;
};

constexpr double kInsertionPenalty = 0.5;

GenerationResult GenerateCandidates(const OtWord &word,
                                    const SchemeTable &table,
                                    const GenLimits &limits = {});

// Checks the character-accuracy invariant of a generated candidate.
bool IsCharacterAccurate(const Candidate &candidate, const OtWord &word,
                         const SchemeTable &table);

struct RomanizeOptions {
  GenLimits limits;
  RescoreConfig rescore;
};

// exceptions -> generation -> lexicon filter (falls back to every candidate
// when none pass) -> LM rescoring (skipped when `lm` is null) -> ranking,
// truncated to limits.max_candidates. `history` holds preceding words of the
// line for the LM context.
std::vector<Candidate> Romanize(const OtWord &word, const SchemeTable &table,
                                const Lexicon &lexicon,
                                const ExceptionLexicon &exceptions,
                                const NgramModel *lm,
                                const RomanizeOptions &options = {},
                                std::span<const std::string> history = {});

}  // namespace otkit

#endif  // OTKIT_ROMANIZER_H_
