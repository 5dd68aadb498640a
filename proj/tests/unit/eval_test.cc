#include "otkit/eval.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "otkit/error.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

using Units = std::vector<std::string>;

// Plain recursive definition, no memoization.
std::size_t RecursiveDistance(const Units &a, std::size_t i, const Units &b,
                              std::size_t j) {
  if (i == a.size()) return b.size() - j;
  if (j == b.size()) return a.size() - i;
  if (a[i] == b[j]) return RecursiveDistance(a, i + 1, b, j + 1);
  return 1 + std::min({RecursiveDistance(a, i + 1, b, j + 1),
                       RecursiveDistance(a, i + 1, b, j),
                       RecursiveDistance(a, i, b, j + 1)});
}

Units RandomUnits(std::mt19937 &rng, std::size_t max_len) {
  static const Units alphabet = {"a", "b", "ç", "ğ", "ü"};
  Units u(rng() % (max_len + 1));
  for (auto &x : u) x = alphabet[rng() % alphabet.size()];
  return u;
}

TEST(LevenshteinAlign, Basics) {
  Alignment same = LevenshteinAlign(SegmentLine("abc"), SegmentLine("abc"));
  EXPECT_EQ(same.matches, 3u);
  EXPECT_EQ(same.distance(), 0u);

  Alignment sub = LevenshteinAlign(SegmentLine("abc"), SegmentLine("axc"));
  EXPECT_EQ(sub.distance(), 1u);
  EXPECT_EQ(sub.substitutions, 1u);
  EXPECT_EQ(sub.ops[1], (AlignedPair{EditOp::kSubstitute, "b", "x"}));

  Alignment ins = LevenshteinAlign(SegmentLine(""), SegmentLine("ab"));
  EXPECT_EQ(ins.insertions, 2u);
  EXPECT_EQ(ins.ops.size(), 2u);
}

TEST(LevenshteinAlign, TracebackPreference) {
  // "ab" -> "b": deleting either 'a' is optimal only once; the traceback
  // keeps the final match and deletes the first unit.
  Alignment a = LevenshteinAlign(Units{"a", "b"}, Units{"b"});
  ASSERT_EQ(a.ops.size(), 2u);
  EXPECT_EQ(a.ops[0].op, EditOp::kDelete);
  EXPECT_EQ(a.ops[1].op, EditOp::kMatch);
  // Substitute is preferred over a delete/insert pair of equal cost.
  Alignment s = LevenshteinAlign(Units{"a"}, Units{"b"});
  ASSERT_EQ(s.ops.size(), 1u);
  EXPECT_EQ(s.ops[0].op, EditOp::kSubstitute);
}

TEST(LevenshteinAlign, AgreesWithRecursiveOracle) {
  std::mt19937 rng(11);
  for (int iter = 0; iter < 2000; ++iter) {
    Units r = RandomUnits(rng, 7), h = RandomUnits(rng, 7);
    const std::size_t oracle = RecursiveDistance(r, 0, h, 0);
    Alignment a = LevenshteinAlign(r, h);
    ASSERT_EQ(a.distance(), oracle);
    ASSERT_EQ(EditDistance(r, h), oracle);
    ASSERT_EQ(ReplayAlignment(r, a), h);
    ASSERT_EQ(a.matches + a.substitutions + a.deletions, r.size());
  }
}

TEST(Cer, Examples) {
  EXPECT_EQ(Cer("gavuruñ", "gavuruñ"), 0.0);
  EXPECT_DOUBLE_EQ(Cer("abcd", "abed"), 0.25);
  EXPECT_DOUBLE_EQ(Cer("ab", ""), 1.0);
  EXPECT_DOUBLE_EQ(Cer("ab", "abcdef"), 2.0);
  // A precomposed and a decomposed ñ are the same unit.
  EXPECT_EQ(Cer("gavuruñ", "gavurun\xCC\x83"), 0.0);
  EXPECT_NEAR(Cer("abcdefghij", "abcdefghiX"), 0.1, 1e-12);
  EXPECT_THROW(Cer("", "a"), Error);
}

TEST(Wer, Examples) {
  EXPECT_EQ(Wer("a b c", "a b c"), 0.0);
  EXPECT_NEAR(Wer("a b c", "a x c"), 1.0 / 3, 1e-12);
  EXPECT_DOUBLE_EQ(Wer("a", "a b"), 1.0);
  EXPECT_THROW(Wer("  ", "a"), Error);
}

TEST(CharErrors, PoolsLinesAndCountsSpaces) {
  ErrorCounts c = CharErrors(Units{"ab cd", "ef"}, Units{"abcd", "ef"});
  EXPECT_EQ(c.edits, 1u);
  EXPECT_EQ(c.ref_length, 7u);
  EXPECT_THROW(CharErrors(Units{"a"}, Units{}), LineCountMismatch);
}

TEST(CorpusReport, MicroAverage) {
  std::vector<DocumentInput> docs = {
      {{"Ahali", "politics", "1919"}, {"abcde", "fghij"}, {"abcde", "fghiX"}},
      {{"Küçük Mecmua", "culture", "1922"}, {"abcdefghij"}, {"XbcdeXghiX"}},
  };
  for (int jobs : {1, 4}) {
    EvalReport r = CorpusReport(docs, jobs);
    ASSERT_EQ(r.rows.size(), 2u);
    EXPECT_NEAR(r.rows[0].cer(), 0.10, 1e-9);
    EXPECT_NEAR(r.rows[1].cer(), 0.30, 1e-9);
    EXPECT_NEAR(r.cer(), 0.20, 1e-9);
    EXPECT_EQ(r.rows[0].meta.name, "Ahali");
  }
  std::string table = CorpusReport(docs).RenderTable();
  EXPECT_NE(table.find("10.00%"), std::string::npos);
  EXPECT_NE(table.find("30.00%"), std::string::npos);
  EXPECT_NE(table.find("20.00%"), std::string::npos);
}

TEST(CorpusReport, MismatchIsExcluded) {
  std::vector<DocumentInput> docs = {
      {{"ok", "", ""}, {"abcd"}, {"abcd"}},
      {{"bad", "", ""}, {"a", "b"}, {"a"}},
  };
  EvalReport r = CorpusReport(docs);
  EXPECT_FALSE(r.rows[0].error);
  ASSERT_TRUE(r.rows[1].error);
  EXPECT_NE(r.rows[1].error->find("LineCountMismatch"), std::string::npos);
  EXPECT_EQ(r.total_chars.ref_length, 4u);
  EXPECT_EQ(r.cer(), 0.0);
  EXPECT_EQ(r.RenderCsv(),
            "name,subject,date,cer,wer\n"
            "ok,,,0.000000,0.000000\n"
            "bad,,,,\n"
            "TOTAL,,,0.000000,0.000000\n");
}

TEST(CorpusReport, IdenticalDocument) {
  std::vector<DocumentInput> docs = {{{"a", "", ""}, {"abc def"}, {"abc def"}}};
  EvalReport r = CorpusReport(docs);
  EXPECT_NE(r.RenderTable().find("0.00%"), std::string::npos);
  EXPECT_TRUE(std::isnan(CorpusReport({}).cer()));
}

}  // namespace
}  // namespace otkit
