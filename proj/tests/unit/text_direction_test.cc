#include "otkit/text_direction.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "otkit/unicode.h"

namespace otkit {
namespace {

// Independent reference: reverse every cluster, then restore each maximal
// digit run to its source order.
std::string OracleReverse(const std::vector<std::string> &g) {
  std::vector<std::string> out(g.rbegin(), g.rend());
  std::size_t i = 0;
  while (i < out.size()) {
    if (!IsDigitGrapheme(out[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < out.size() && IsDigitGrapheme(out[j])) ++j;
    std::reverse(out.begin() + i, out.begin() + j);
    i = j;
  }
  std::string s;
  for (auto &x : out) s += x;
  return s;
}

TEST(SegmentLine, Empty) {
  EXPECT_EQ(SegmentLine("").size(), 0u);
}

TEST(SegmentLine, PrecomposedAndCombiningTildeAgree) {
  GraphemeLine precomposed = SegmentLine("gavuruñ");
  GraphemeLine decomposed = SegmentLine("gavuruñ");
  ASSERT_EQ(precomposed.size(), 7u);
  EXPECT_EQ(precomposed.graphemes(), decomposed.graphemes());
  EXPECT_EQ(precomposed[6], "ñ");
  EXPECT_FALSE(decomposed.source_normalized());
}

TEST(SegmentLine, HandCountAfterNfc) {
  EXPECT_EQ(SegmentLine("şa'âtleri").size(), 9u);
  EXPECT_EQ(SegmentLine("şa'âtleri").size(), 9u);
}

TEST(SegmentLine, ConcatenationIsNfc) {
  const std::string src = "été 1919 ال";
  GraphemeLine line = SegmentLine(src);
  EXPECT_EQ(line.str(), Nfc(src));
  for (const auto &g : line.graphemes()) EXPECT_FALSE(g.empty());
}

TEST(SegmentRuns, MaximalDigitRuns) {
  EXPECT_EQ(SegmentRuns(SegmentLine("ab12cd")),
            (std::vector<RunSegment>{{RunKind::kReversible, 0, 2},
                                     {RunKind::kDigitRun, 2, 4},
                                     {RunKind::kReversible, 4, 6}}));
  EXPECT_EQ(SegmentRuns(SegmentLine("1912")),
            (std::vector<RunSegment>{{RunKind::kDigitRun, 0, 4}}));
  EXPECT_EQ(SegmentRuns(SegmentLine("abc")),
            (std::vector<RunSegment>{{RunKind::kReversible, 0, 3}}));
  EXPECT_TRUE(SegmentRuns(SegmentLine("")).empty());
}

TEST(SegmentRuns, ArabicIndicDigits) {
  auto runs = SegmentRuns(SegmentLine("s١٩١٩ 3"));
  ASSERT_EQ(runs.size(), 4u);
  EXPECT_EQ(runs[1], (RunSegment{RunKind::kDigitRun, 1, 5}));
  EXPECT_EQ(runs[3], (RunSegment{RunKind::kDigitRun, 6, 7}));
}

TEST(ReverseLine, ReferenceWords) {
  EXPECT_EQ(ReverseLine("gavuruñ"), "ñuruvag");
  EXPECT_EQ(ReverseLine("ğâbil"), "libâğ");
  EXPECT_EQ(ReverseLine("ğâbil"), "libâğ");
}

TEST(ReverseLine, DigitRunsKeepOrder) {
  EXPECT_EQ(ReverseLine("sayfa 12"), "12 afyas");
  EXPECT_EQ(ReverseLine("1919 senesi 3 mart"), "tram 3 isenes 1919");
  ReversalOptions plain;
  plain.preserve_digit_runs = false;
  EXPECT_EQ(ReverseLine("sayfa 12", plain), "21 afyas");
}

TEST(ReverseLine, EmptyAndMirror) {
  EXPECT_EQ(ReverseLine(""), "");
  ReversalOptions mirror;
  mirror.mirror_brackets = true;
  EXPECT_EQ(ReverseLine("(ab) [c]"), "]c[ )ba(");
  EXPECT_EQ(ReverseLine("(ab) [c]", mirror), "[c] (ba)");
}

TEST(ReverseDocument, ElementWise) {
  std::vector<std::string> in = {"ab", "cd"};
  EXPECT_EQ(ReverseDocument(in), (std::vector<std::string>{"ba", "dc"}));
  EXPECT_TRUE(ReverseDocument(std::vector<std::string>{}).empty());

  std::vector<std::string> mixed = {"sene 1337", "12 mart 1919", "x0y"};
  auto out = ReverseDocument(mixed);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t i = 0; i < mixed.size(); ++i)
    EXPECT_EQ(out[i], OracleReverse(Graphemes(mixed[i])));
}

TEST(ReverseLine, MatchesOracleAndIsInvolutionOnRandomText) {
  const std::vector<std::string> bases = {"a", "b", "ş", "ğ", "i", "ı", " ",
                                          "1", "2", "0", "٣", "-", "'", "â"};
  const std::vector<std::string> marks = {"́", "̂", "̃",
                                          "̧"};
  std::mt19937 rng(7);
  for (int iter = 0; iter < 2000; ++iter) {
    std::string s;
    int len = static_cast<int>(rng() % 16);
    for (int k = 0; k < len; ++k) {
      s += bases[rng() % bases.size()];
      if (rng() % 4 == 0) s += marks[rng() % marks.size()];
    }
    const std::string r = ReverseLine(s);
    EXPECT_EQ(r, OracleReverse(Graphemes(s))) << s;
    EXPECT_EQ(ReverseLine(r), Nfc(s)) << s;
    EXPECT_EQ(SegmentLine(r).size(), SegmentLine(s).size());
  }
}

TEST(ReverseLine, CombiningMarksStayWithBase) {
  // Every mark follows the same base before and after reversal.
  const std::string s = "kâtib 12 şe";
  std::vector<std::string> in = Graphemes(s), out = Graphemes(ReverseLine(s));
  std::sort(in.begin(), in.end());
  std::sort(out.begin(), out.end());
  EXPECT_EQ(in, out);
}

}  // namespace
}  // namespace otkit
