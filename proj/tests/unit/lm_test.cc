#include "otkit/lm.h"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include "otkit/error.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

using Lines = std::vector<std::string>;

NgramOptions Opts(int order, double k) {
  NgramOptions o;
  o.order = order;
  o.k = k;
  return o;
}

Candidate Cand(std::string surface, double gen) {
  Candidate c;
  c.surface = std::move(surface);
  c.gen_score = gen;
  c.total = gen;
  return c;
}

TEST(NgramModel, AddKByHand) {
  const double k = 0.1;
  NgramModel m = NgramModel::Train(Lines{"a b", "a b"}, Opts(2, k));
  const Lines a = {"a"};
  // |V| = {a, b}, plus <unk>.
  EXPECT_NEAR(m.Prob(a, "b"), (2 + k) / (2 + k * 3), 1e-12);
  EXPECT_NEAR(m.Prob(a, "a"), k / (2 + k * 3), 1e-12);
  EXPECT_NEAR(m.Prob(Lines{}, "a"), (2 + k) / (2 + k * 3), 1e-12);

  NgramModel uni = NgramModel::Train(Lines{"x"}, Opts(1, k));
  EXPECT_NEAR(uni.Prob({}, "x"), (1 + k) / (1 + k * 2), 1e-12);
  EXPECT_NEAR(uni.Prob({}, kUnkToken), k / (1 + k * 2), 1e-12);
}

TEST(NgramModel, EmptyCorpus) {
  for (const Lines &corpus : {Lines{}, Lines{"", "   "}}) {
    try {
      NgramModel::Train(corpus);
      FAIL();
    } catch (const Error &e) {
      EXPECT_EQ(e.code(), ErrorCode::kEmptyCorpus);
    }
  }
}

TEST(NgramModel, BadOptions) {
  EXPECT_THROW(NgramModel::Train(Lines{"a"}, Opts(0, 0.1)), Error);
  EXPECT_THROW(NgramModel::Train(Lines{"a"}, Opts(2, 0.0)), Error);
}

TEST(NgramModel, DistributionsSumToOne) {
  const Lines corpus = {"bu gün amele geldi", "amele çalıştı",
                        "gazete çıktı bu gün", "devlet kararı ilan edildi"};
  for (int order : {1, 2, 3}) {
    NgramModel m = NgramModel::Train(corpus, Opts(order, 0.3));
    std::vector<std::vector<std::string>> histories;
    for (const auto &[h, next] : m.word_counts().table) histories.push_back(h);
    histories.push_back(std::vector<std::string>(order - 1, "never-seen"));
    for (const auto &h : histories) {
      double sum = m.Prob(h, kUnkToken);
      for (const auto &w : m.vocab()) sum += m.Prob(h, w);
      EXPECT_NEAR(sum, 1.0, 1e-9);
    }
  }
}

TEST(NgramModel, SeenBigramBeatsUnseen) {
  NgramModel m = NgramModel::Train(Lines{"a b", "c d"});
  EXPECT_GT(m.LogProb(Lines{"a"}, "b"), m.LogProb(Lines{"a"}, "d"));
  EXPECT_GT(m.ScoreText("a b"), m.ScoreText("a d"));
}

TEST(NgramModel, AmeleOutscoresImle) {
  NgramModel m = NgramModel::Train(Lines{"amele geldi", "bu amele çalıştı"});
  EXPECT_GT(m.ScoreText("amele"), m.ScoreText("imle"));
  EXPECT_TRUE(std::isfinite(m.ScoreText("imle")));
}

TEST(NgramModel, UnseenInflectionBeatsRandomString) {
  NgramModel m = NgramModel::Train(
      Lines{"amele geldi", "kitablar geldiler", "evler güzel", "gemiler gitti"});
  ASSERT_FALSE(m.InVocab("ameleler"));
  const double inflected = m.ScoreText("ameleler");
  const std::string alphabet = "abcçdefgğhıijklmnoöprsştuüvyz";
  const auto letters = Graphemes(alphabet);
  std::mt19937 rng(3);
  for (int i = 0; i < 200; ++i) {
    std::string w;
    for (int j = 0; j < 8; ++j) w += letters[rng() % letters.size()];
    if (m.InVocab(w)) continue;
    EXPECT_GT(inflected, m.ScoreText(w)) << w;
  }
}

TEST(Perplexity, DeterministicCorpusApproachesOne) {
  NgramModel m = NgramModel::Train(Lines{"a a a"}, Opts(1, 1e-9));
  EXPECT_NEAR(Perplexity(m, Lines{"a a a"}), 1.0, 1e-6);
}

TEST(Perplexity, UniformModel) {
  NgramModel m = NgramModel::Train(Lines{"a b c"}, Opts(1, 1e-9));
  EXPECT_NEAR(Perplexity(m, Lines{"a b c"}), 3.0, 1e-6);
}

TEST(Perplexity, LargerKRaisesPerplexityOnSkewedData) {
  const Lines corpus = {"a a a a b"};
  double low = Perplexity(NgramModel::Train(corpus, Opts(1, 0.1)), corpus);
  double high = Perplexity(NgramModel::Train(corpus, Opts(1, 1.0)), corpus);
  EXPECT_LT(low, high);
  // Hand-computed: P(a) = 4.1/5.3, P(b) = 1.1/5.3.
  const double ll = 4 * std::log(4.1 / 5.3) + std::log(1.1 / 5.3);
  EXPECT_NEAR(low, std::exp(-ll / 5), 1e-12);
  EXPECT_THROW(Perplexity(NgramModel::Train(corpus), Lines{""}), Error);
}

TEST(NgramModel, JsonRoundTripAndParallelTraining) {
  const Lines corpus = {"bu gün amele geldi", "amele çalıştı", "x y z",
                        "gazete çıktı", "a b c d e"};
  NgramModel m = NgramModel::Train(corpus);
  EXPECT_EQ(NgramModel::FromJson(m.ToJson()), m);
  EXPECT_EQ(NgramModel::TrainParallel(corpus, {}, 3), m);
  EXPECT_EQ(NgramModel::TrainParallel(corpus, {}, 16), m);

  auto path = std::filesystem::temp_directory_path() / "otkit_lm_test.json";
  m.SaveFile(path);
  EXPECT_EQ(NgramModel::LoadFile(path), m);
  std::filesystem::remove(path);

  EXPECT_THROW(NgramModel::FromJson("{}"), Error);
  EXPECT_THROW(NgramModel::FromJson("not json"), Error);
}

TEST(Rescore, AlphaZeroUsesLmOnly) {
  NgramModel m = NgramModel::Train(Lines{"amele geldi", "bu amele"});
  std::vector<Candidate> cs = {Cand("imle", -0.5), Cand("amele", -3.0)};
  RescoreConfig lm_only;
  lm_only.alpha = 0.0;
  auto out = Rescore(cs, m, lm_only);
  EXPECT_EQ(out[0].surface, "amele");
  EXPECT_NEAR(out[0].lm_score, m.LogProb({}, "amele"), 1e-12);
  EXPECT_NEAR(out[0].total, out[0].lm_score, 1e-12);
}

TEST(Rescore, AlphaOneKeepsGenerationOrder) {
  NgramModel m = NgramModel::Train(Lines{"amele geldi"});
  std::vector<Candidate> cs = {Cand("imle", -0.5), Cand("amele", -3.0),
                               Cand("amla", -4.0)};
  RescoreConfig gen_only;
  gen_only.alpha = 1.0;
  auto out = Rescore(cs, m, gen_only);
  ASSERT_EQ(out.size(), 3u);
  for (std::size_t i = 0; i < cs.size(); ++i)
    EXPECT_EQ(out[i].surface, cs[i].surface);
}

TEST(Rescore, TiesAreLexicographic) {
  std::vector<Candidate> cs = {Cand("b", -1), Cand("c", -1), Cand("a", -1)};
  RankCandidates(cs);
  EXPECT_EQ(cs[0].surface, "a");
  EXPECT_EQ(cs[1].surface, "b");
  EXPECT_EQ(cs[2].surface, "c");
}

TEST(Rescore, AlphaRange) {
  NgramModel m = NgramModel::Train(Lines{"a"});
  RescoreConfig bad;
  bad.alpha = 1.5;
  EXPECT_THROW(Rescore({Cand("a", 0)}, m, bad), Error);
}

}  // namespace
}  // namespace otkit
