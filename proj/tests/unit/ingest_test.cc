#include "otkit/ingest.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "otkit/error.h"
#include "otkit/file_io.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

namespace fs = std::filesystem;

fs::path FixtureDir() { return OTKIT_FIXTURE_DIR; }

PageDocument FixturePage() { return LoadPageXml(FixtureDir() / "page_2x3.xml"); }

std::vector<std::string> FixtureTranscript() {
  return TranscriptLines(ReadFile(FixtureDir() / "page_2x3.txt"));
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("otkit_ingest_" + std::to_string(::testing::UnitTest::GetInstance()
                                                  ->random_seed()) +
             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path &path() const { return path_; }

 private:
  fs::path path_;
};

CorpusManifest Synthetic(std::size_t n) {
  CorpusManifest m;
  for (std::size_t i = 0; i < n; ++i)
    m.entries.push_back({"p" + std::to_string(i) + ".xml",
                         "p" + std::to_string(i) + ".txt", SchemeId::Loose(),
                         {}, std::nullopt});
  return m;
}

std::map<SplitLabel, std::size_t> Counts(const CorpusManifest &m) {
  std::map<SplitLabel, std::size_t> c;
  for (const auto &e : m.entries) ++c[e.split.value()];
  return c;
}

TEST(Transcript, BlankLinesSeparateRegions) {
  auto regions = ParseTranscript("a\nb\n\n\nc\n");
  ASSERT_EQ(regions.size(), 2u);
  EXPECT_EQ(regions[0], (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(TranscriptLines("a\r\nb\n\nc"), (std::vector<std::string>{"a", "b", "c"}));
}

TEST(PairGroundTruth, SixLines) {
  auto pairs = PairGroundTruth(FixturePage(), FixtureTranscript());
  ASSERT_EQ(pairs.size(), 6u);
  EXPECT_EQ(pairs[0].line_id, "r1l1");
  EXPECT_EQ(pairs[3].region_id, "r2");
  EXPECT_EQ(pairs[3].text, "gavuruñ");
  EXPECT_EQ(pairs[0].baseline.size(), 3u);
}

TEST(PairGroundTruth, CountMismatch) {
  auto transcript = FixtureTranscript();
  transcript.pop_back();
  try {
    PairGroundTruth(FixturePage(), transcript);
    FAIL();
  } catch (const LineCountMismatch &e) {
    EXPECT_EQ(e.expected(), 6u);
    EXPECT_EQ(e.actual(), 5u);
  }
}

TEST(PairGroundTruth, TyposPreservedVerbatim) {
  auto transcript = FixtureTranscript();
  transcript[4] = "ğâbill";  // doubled letter, as typed
  GroundTruthPolicy policy;
  policy.correction = [](std::string_view) { return std::string("fixed"); };
  auto kept = PairGroundTruth(FixturePage(), transcript, policy);
  EXPECT_EQ(kept[4].text, "ğâbill");
  policy.preserve_errors = false;
  auto corrected = PairGroundTruth(FixturePage(), transcript, policy);
  EXPECT_EQ(corrected[4].text, "fixed");
}

TEST(PairGroundTruth, OnlyNfcIsApplied) {
  auto transcript = FixtureTranscript();
  transcript[3] = "gavurun\xCC\x83";
  auto pairs = PairGroundTruth(FixturePage(), transcript);
  EXPECT_EQ(pairs[3].text, "gavuruñ");
  EXPECT_EQ(pairs[3].text, Nfc(transcript[3]));
}

TEST(ExportTrainingPairs, ReversedFiles) {
  TempDir tmp;
  PageDocument page = FixturePage();
  auto pairs = PairGroundTruth(page, FixtureTranscript());
  ExportedFiles files = ExportTrainingPairs(pairs, true, tmp.path(), "page", &page);
  auto lines = SplitLines(ReadFile(files.transcript));
  EXPECT_EQ(lines[4], "ñuruvag");
  EXPECT_EQ(lines[5], "libâğ");
  EXPECT_EQ(lines[1], "12 afyas");
  EXPECT_EQ(lines[3], "");
  PageDocument exported = LoadPageXml(*files.page_xml);
  EXPECT_EQ(exported.regions[1].lines[0].text, "ñuruvag");
  EXPECT_EQ(exported.regions[1].lines[0].baseline,
            page.regions[1].lines[0].baseline);
}

TEST(ExportTrainingPairs, ForwardIsIdentity) {
  TempDir tmp;
  PageDocument page = FixturePage();
  const std::string original = ReadFile(FixtureDir() / "page_2x3.txt");
  auto pairs = PairGroundTruth(page, TranscriptLines(original));
  ExportedFiles files = ExportTrainingPairs(pairs, false, tmp.path(), "fwd");
  EXPECT_EQ(ReadFile(files.transcript), Nfc(original));
  EXPECT_FALSE(files.page_xml);
}

TEST(ExportTrainingPairs, DoubleReversalRestoresTranscript) {
  TempDir tmp;
  PageDocument page = FixturePage();
  const std::string original = ReadFile(FixtureDir() / "page_2x3.txt");
  auto pairs = PairGroundTruth(page, TranscriptLines(original));
  auto once = ExportTrainingPairs(pairs, true, tmp.path(), "once");
  auto back_pairs = PairGroundTruth(page, TranscriptLines(ReadFile(once.transcript)));
  auto twice = ExportTrainingPairs(back_pairs, true, tmp.path(), "twice");
  EXPECT_EQ(ReadFile(twice.transcript), Nfc(original));
}

TEST(ExportTrainingPairs, IoErrorNamesPath) {
  TempDir tmp;
  WriteFile(tmp.path() / "blocker", "x");
  auto pairs = PairGroundTruth(FixturePage(), FixtureTranscript());
  try {
    ExportTrainingPairs(pairs, true, tmp.path() / "blocker" / "sub", "p");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
    EXPECT_NE(std::string(e.what()).find("blocker"), std::string::npos);
  }
}

TEST(Manifest, LoadFixtureAndRoundTrip) {
  CorpusManifest m = LoadManifest(FixtureDir() / "corpus" / "manifest.json");
  ASSERT_EQ(m.entries.size(), 10u);
  EXPECT_EQ(m.seed, 42u);
  EXPECT_EQ(m.entries[0].meta.name, "Ahali");
  EXPECT_EQ(m.entries[5].scheme, SchemeId::Ia());
  CorpusManifest again = ParseManifest(ManifestToJson(m), m.base_dir);
  EXPECT_EQ(ManifestToJson(again), ManifestToJson(m));
}

TEST(Manifest, Errors) {
  EXPECT_THROW(ParseManifest("{"), Error);
  EXPECT_THROW(ParseManifest(R"({"entries": [{"page": "a"}]})"), Error);
  EXPECT_THROW(
      ParseManifest(R"({"entries": [{"page": "a", "transcript": "b", "split": "dev"}]})"),
      Error);
  TempDir tmp;
  WriteFile(tmp.path() / "m.json",
            R"({"entries": [{"page": "missing.xml", "transcript": "t.txt"}]})");
  try {
    LoadManifest(tmp.path() / "m.json");
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kIo);
    EXPECT_NE(std::string(e.what()).find("missing.xml"), std::string::npos);
  }
}

TEST(SplitCorpus, TenEntries) {
  CorpusManifest a = SplitCorpus(Synthetic(10), {0.8, 0.1, 0.1}, 42);
  CorpusManifest b = SplitCorpus(Synthetic(10), {0.8, 0.1, 0.1}, 42);
  auto c = Counts(a);
  EXPECT_EQ(c[SplitLabel::kTrain], 8u);
  EXPECT_EQ(c[SplitLabel::kVal], 1u);
  EXPECT_EQ(c[SplitLabel::kTest], 1u);
  EXPECT_EQ(ManifestToJson(a), ManifestToJson(b));
  EXPECT_EQ(a.seed, 42u);
  CorpusManifest other = SplitCorpus(Synthetic(10), {0.8, 0.1, 0.1}, 43);
  EXPECT_EQ(Counts(other), c);
}

TEST(SplitCorpus, SingleEntryGoesToTrain) {
  CorpusManifest m = SplitCorpus(Synthetic(1), {0.8, 0.1, 0.1}, 7);
  EXPECT_EQ(m.entries[0].split, SplitLabel::kTrain);
}

TEST(SplitCorpus, Preconditions) {
  try {
    SplitCorpus(Synthetic(0), {}, 1);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyManifest);
  }
  EXPECT_THROW(SplitCorpus(Synthetic(3), {0.5, 0.5, 0.1}, 1), Error);
  EXPECT_THROW(SplitCorpus(Synthetic(3), {1.0, 0.0, 0.0}, 1), Error);
}

TEST(SplitCorpus, ProportionsWithinOneEntry) {
  for (std::size_t n = 1; n <= 60; ++n) {
    for (SplitRatios r : {SplitRatios{0.8, 0.1, 0.1}, SplitRatios{0.6, 0.2, 0.2},
                          SplitRatios{0.34, 0.33, 0.33}}) {
      auto c = Counts(SplitCorpus(Synthetic(n), r, n));
      const double exact[3] = {r.train * n, r.val * n, r.test * n};
      const std::size_t got[3] = {c[SplitLabel::kTrain], c[SplitLabel::kVal],
                                  c[SplitLabel::kTest]};
      EXPECT_EQ(got[0] + got[1] + got[2], n);
      for (int i = 0; i < 3; ++i)
        EXPECT_LT(std::abs(static_cast<double>(got[i]) - exact[i]), 1.0)
            << n << " " << i;
    }
  }
}

TEST(SeededPermutation, IsPermutationAndStable) {
  auto p = SeededPermutation(50, 42);
  std::set<std::size_t> s(p.begin(), p.end());
  EXPECT_EQ(s.size(), 50u);
  EXPECT_EQ(*s.rbegin(), 49u);
  EXPECT_EQ(p, SeededPermutation(50, 42));
  EXPECT_NE(p, SeededPermutation(50, 41));
}

}  // namespace
}  // namespace otkit
