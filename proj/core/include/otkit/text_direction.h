// Storage-order reversal of Latin transcription lines.
//
// Training platforms that pair right-to-left page images with text expect the
// text in right-to-left storage order. A left-to-right Modern Turkish
// transcription is therefore stored with its grapheme clusters reversed,
// while numerals, which are written left to right inside Arabic-script text,
// keep their internal order.

#ifndef OTKIT_TEXT_DIRECTION_H_
#define OTKIT_TEXT_DIRECTION_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace otkit {

// A line as a sequence of extended grapheme clusters. Concatenating the
// clusters reproduces the NFC form of the source text, and no cluster is
// empty.
class GraphemeLine {
 public:
  GraphemeLine() = default;

  const std::vector<std::string> &graphemes() const { return graphemes_; }
  // False when the source had to be normalized.
  bool source_normalized() const { return source_normalized_; }
  std::size_t size() const { return graphemes_.size(); }
  bool empty() const { return graphemes_.empty(); }
  const std::string &operator[](std::size_t i) const { return graphemes_[i]; }

  std::string str() const;

  bool operator==(const GraphemeLine &) const = default;

 private:
  friend GraphemeLine SegmentLine(std::string_view text);
  std::vector<std::string> graphemes_;
  bool source_normalized_ = true;
};

enum class RunKind { kReversible, kDigitRun };

// Half-open range [begin, end) of grapheme indices.
struct RunSegment {
  RunKind kind;
  std::size_t begin;
  std::size_t end;

  bool operator==(const RunSegment &) const = default;
};

struct ReversalOptions {
  // Swap paired brackets, e.g. "(" <-> ")", after reversal.
  bool mirror_brackets = false;
  // Keep maximal runs of decimal digits in their original order.
  bool preserve_digit_runs = true;
};

GraphemeLine SegmentLine(std::string_view text);

// Ordered, covering, non-overlapping segmentation into maximal digit runs
// and everything else.
std::vector<RunSegment> SegmentRuns(const GraphemeLine &line);

std::string ReverseLine(std::string_view text,
                        const ReversalOptions &opts = {});

// Element-wise ReverseLine; line order is unchanged.
std::vector<std::string> ReverseDocument(std::span<const std::string> lines,
                                         const ReversalOptions &opts = {});

}  // namespace otkit

#endif  // OTKIT_TEXT_DIRECTION_H_
