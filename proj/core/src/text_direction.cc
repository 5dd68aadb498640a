#include "otkit/text_direction.h"

#include <algorithm>
#include <utility>

#include "otkit/unicode.h"

namespace otkit {
namespace {

constexpr std::pair<std::string_view, std::string_view> kBracketPairs[] = {
    {"(", ")"}, {"[", "]"}, {"{", "}"}, {"<", ">"}, {"«", "»"}, {"‹", "›"},
};

std::string_view MirrorBracket(std::string_view g) {
  for (const auto &[open, close] : kBracketPairs) {
    if (g == open) return close;
    if (g == close) return open;
  }
  return g;
}

}  // namespace

std::string GraphemeLine::str() const {
  std::string out;
  for (const auto &g : graphemes_) out += g;
  return out;
}

GraphemeLine SegmentLine(std::string_view text) {
  GraphemeLine line;
  line.graphemes_ = Graphemes(text);
  line.source_normalized_ = Nfc(text) == text;
  return line;
}

std::vector<RunSegment> SegmentRuns(const GraphemeLine &line) {
  std::vector<RunSegment> runs;
  const std::size_t n = line.size();
  std::size_t i = 0;
  while (i < n) {
    const bool digit = IsDigitGrapheme(line[i]);
    std::size_t j = i + 1;
    while (j < n && IsDigitGrapheme(line[j]) == digit) ++j;
    runs.push_back({digit ? RunKind::kDigitRun : RunKind::kReversible, i, j});
    i = j;
  }
  return runs;
}

std::string ReverseLine(std::string_view text, const ReversalOptions &opts) {
  const GraphemeLine line = SegmentLine(text);
  std::vector<std::string> out(line.graphemes().rbegin(),
                               line.graphemes().rend());
  if (opts.preserve_digit_runs) {
    const std::size_t n = line.size();
    for (const RunSegment &run : SegmentRuns(line)) {
      if (run.kind != RunKind::kDigitRun) continue;
      // Input span [begin, end) lands at [n - end, n - begin) reversed.
      std::reverse(out.begin() + static_cast<std::ptrdiff_t>(n - run.end),
                   out.begin() + static_cast<std::ptrdiff_t>(n - run.begin));
    }
  }
  std::string result;
  result.reserve(text.size());
  for (const auto &g : out)
    result += opts.mirror_brackets ? MirrorBracket(g) : std::string_view(g);
  return result;
}

std::vector<std::string> ReverseDocument(std::span<const std::string> lines,
                                         const ReversalOptions &opts) {
  std::vector<std::string> out;
  out.reserve(lines.size());
  for (const auto &line : lines) out.push_back(ReverseLine(line, opts));
  return out;
}

}  // namespace otkit
