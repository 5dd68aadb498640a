// Ground-truth preparation: pairing transcripts with PAGE text lines,
// exporting (optionally reversed) training text, and corpus manifests.
//
// Transcript files are UTF-8, LF line endings, one line per TextLine in
// reading order, with one blank line between text regions.
//
// Manifests are JSON:
//   {
//     "format": "otkit-manifest", "version": 1, "seed": 42,
//     "entries": [
//       { "page": "pages/p001.xml", "transcript": "gt/p001.txt",
//         "scheme": "ia",
//         "meta": { "name": "...", "subject": "...", "date": "..." },
//         "split": "train" }
//     ]
//   }
// Paths are relative to the manifest's directory. "seed" and "split" are
// optional until SplitCorpus assigns them.

#ifndef OTKIT_INGEST_H_
#define OTKIT_INGEST_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "otkit/eval.h"
#include "otkit/page_xml.h"
#include "otkit/scheme.h"
#include "otkit/text_direction.h"

namespace otkit {

struct GroundTruthPolicy {
  // Keep the transcriber's text verbatim (typos included); only NFC is
  // applied. When false, `correction` (if set) is applied to each line.
  bool preserve_errors = true;
  std::function<std::string(std::string_view)> correction;
};

struct PairedLine {
  std::string region_id;
  std::string line_id;
  std::vector<Point> baseline;
  std::string text;

  bool operator==(const PairedLine &) const = default;
};

// Regions of lines, split on blank lines.
std::vector<std::vector<std::string>> ParseTranscript(std::string_view text);
// All non-blank lines of a transcript, in order.
std::vector<std::string> TranscriptLines(std::string_view text);

// Pairs the document's lines, in reading order, with transcript lines.
// Throws LineCountMismatch(document lines, transcript lines).
std::vector<PairedLine> PairGroundTruth(const PageDocument &doc,
                                        std::span<const std::string> transcript,
                                        const GroundTruthPolicy &policy = {});

// Copy of `doc` with each paired line's text written into its TextLine.
PageDocument ApplyPairs(PageDocument doc, std::span<const PairedLine> pairs);

// Transcript text for the pairs, regrouped by region; lines reversed with
// ReverseLine when `reverse` is set.
std::string FormatTrainingText(std::span<const PairedLine> pairs, bool reverse,
                               const ReversalOptions &opts = {});

struct ExportedFiles {
  std::filesystem::path transcript;
  std::optional<std::filesystem::path> page_xml;
};

// Writes <out_dir>/<basename>.txt and, when `page` is given, the page with
// the (possibly reversed) texts as <out_dir>/<basename>.xml. I/O failures
// throw IoError naming the path.
ExportedFiles ExportTrainingPairs(std::span<const PairedLine> pairs,
                                  bool reverse,
                                  const std::filesystem::path &out_dir,
                                  std::string_view basename,
                                  const PageDocument *page = nullptr,
                                  const ReversalOptions &opts = {});

enum class SplitLabel { kTrain, kVal, kTest };

std::string_view SplitLabelName(SplitLabel label);

struct ManifestEntry {
  std::string page;
  std::string transcript;
  SchemeId scheme = SchemeId::Loose();
  DocumentMeta meta;
  std::optional<SplitLabel> split;
};

struct CorpusManifest {
  std::vector<ManifestEntry> entries;
  std::optional<std::uint64_t> seed;
  std::filesystem::path base_dir;  // directory relative paths resolve against

  std::filesystem::path Resolve(const std::string &relative) const {
    return base_dir / relative;
  }
};

CorpusManifest ParseManifest(std::string_view json_text,
                             const std::filesystem::path &base_dir = {});
// Parses and checks that every page and transcript file exists (IoError).
CorpusManifest LoadManifest(const std::filesystem::path &path);
std::string ManifestToJson(const CorpusManifest &manifest);

struct SplitRatios {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;
};

// Shuffles entry indices with a seeded Mersenne Twister and labels the first
// round(train * n) train, the next val, the rest test. Counts use
// largest-remainder rounding, so each is within one entry of exact.
// Throws EmptyManifest, or InvalidArgument for negative ratios or ratios not
// summing to 1 (+/- 1e-9).
CorpusManifest SplitCorpus(CorpusManifest manifest, const SplitRatios &ratios,
                           std::uint64_t seed);

// Fisher-Yates permutation of [0, n) drawn from std::mt19937_64(seed), using
// only raw engine output so it is identical on every platform.
std::vector<std::size_t> SeededPermutation(std::size_t n, std::uint64_t seed);

}  // namespace otkit

#endif  // OTKIT_INGEST_H_
