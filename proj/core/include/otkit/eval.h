// Character and word error rates.
//
// CER = (S + I + D) / |reference| over extended grapheme clusters, so a
// diacritic-marked letter counts as one unit. Whitespace inside a line is
// counted; line breaks are not. Rates are micro-averaged (pooled edits over
// pooled reference length) and are not clipped at 1.

#ifndef OTKIT_EVAL_H_
#define OTKIT_EVAL_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otkit/text_direction.h"

namespace otkit {

enum class EditOp { kMatch, kSubstitute, kInsert, kDelete };

struct AlignedPair {
  EditOp op;
  std::string ref;  // empty for kInsert
  std::string hyp;  // empty for kDelete

  bool operator==(const AlignedPair &) const = default;
};

struct Alignment {
  std::vector<AlignedPair> ops;
  std::size_t matches = 0;
  std::size_t substitutions = 0;
  std::size_t insertions = 0;
  std::size_t deletions = 0;

  std::size_t distance() const {
    return substitutions + insertions + deletions;
  }
};

// Unit-cost Levenshtein alignment. Traceback from the end prefers
// Match > Substitute > Delete > Insert among optimal moves.
Alignment LevenshteinAlign(std::span<const std::string> ref,
                           std::span<const std::string> hyp);
Alignment LevenshteinAlign(const GraphemeLine &ref, const GraphemeLine &hyp);

// Distance only, O(min(n, m)) memory.
std::size_t EditDistance(std::span<const std::string> ref,
                         std::span<const std::string> hyp);

// Applies the alignment's edits to `ref`; yields the hypothesis.
std::vector<std::string> ReplayAlignment(std::span<const std::string> ref,
                                         const Alignment &alignment);

// Throw EmptyReference when the reference has no units.
double Cer(std::string_view ref, std::string_view hyp);
double Wer(std::string_view ref, std::string_view hyp);

struct ErrorCounts {
  std::size_t edits = 0;
  std::size_t ref_length = 0;

  void Add(const ErrorCounts &o) {
    edits += o.edits;
    ref_length += o.ref_length;
  }
  // edits / ref_length; NaN when ref_length is 0.
  double Rate() const;
};

// Pooled counts over parallel line lists.
ErrorCounts CharErrors(std::span<const std::string> ref_lines,
                       std::span<const std::string> hyp_lines);
ErrorCounts WordErrors(std::span<const std::string> ref_lines,
                       std::span<const std::string> hyp_lines);

struct DocumentMeta {
  std::string name;
  std::string subject;
  std::string date;

  bool operator==(const DocumentMeta &) const = default;
};

struct DocumentInput {
  DocumentMeta meta;
  std::vector<std::string> ref_lines;
  std::vector<std::string> hyp_lines;
};

struct ReportRow {
  DocumentMeta meta;
  ErrorCounts chars;
  ErrorCounts words;
  // Set when the document was excluded from the totals.
  std::optional<std::string> error;

  double cer() const { return chars.Rate(); }
  double wer() const { return words.Rate(); }
};

struct EvalReport {
  std::vector<ReportRow> rows;
  ErrorCounts total_chars;
  ErrorCounts total_words;

  double cer() const { return total_chars.Rate(); }
  double wer() const { return total_words.Rate(); }

  // Aligned columns: name, subject, date, CER, WER; then a total row.
  std::string RenderTable() const;
  // Header "name,subject,date,cer,wer"; rates as fractions with six
  // decimals; excluded documents have empty rate fields.
  std::string RenderCsv() const;
};

// Documents are evaluated independently (on up to `jobs` threads) and rows
// keep input order. Line-count mismatches and empty references flag the row
// and exclude it from the totals.
EvalReport CorpusReport(std::span<const DocumentInput> documents, int jobs = 1);

}  // namespace otkit

#endif  // OTKIT_EVAL_H_
