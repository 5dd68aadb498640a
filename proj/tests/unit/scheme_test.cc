#include "otkit/scheme.h"

#include <gtest/gtest.h>

#include "otkit/error.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

using Letters = std::vector<std::string>;

const SchemeTable &Polyphonic() {
  static const SchemeTable t =
      SchemeTable::LoadFile(std::string(OTKIT_DATA_DIR) + "/polyphonic.json");
  return t;
}

TEST(SchemeTable, PolyphonicRowsVerbatim) {
  for (const SchemeTable *t : {&Polyphonic(), &SchemeTable::Default()}) {
    EXPECT_EQ(OtLetterCandidates("ا", *t), (Letters{"a", "e"}));
    EXPECT_EQ(OtLetterCandidates("ض", *t), (Letters{"d", "z"}));
    EXPECT_EQ(OtLetterCandidates("ك", *t), (Letters{"k", "g", "ğ", "n"}));
    EXPECT_EQ(OtLetterCandidates("و", *t), (Letters{"v", "o", "u", "ö", "ü"}));
    EXPECT_EQ(OtLetterCandidates("ه", *t), (Letters{"h", "e", "a"}));
    EXPECT_EQ(OtLetterCandidates("ی", *t), (Letters{"y", "a", "ı", "i"}));
  }
  EXPECT_EQ(Polyphonic().ot_to_latin().size(), 6u);
}

TEST(SchemeTable, VariantCodePointsResolve) {
  const SchemeTable &t = SchemeTable::Default();
  EXPECT_EQ(OtLetterCandidates("ک", t), OtLetterCandidates("ك", t));
  EXPECT_EQ(OtLetterCandidates("ى", t), OtLetterCandidates("ی", t));
  EXPECT_EQ(OtLetterCandidates("ي", t), OtLetterCandidates("ی", t));
}

TEST(SchemeTable, EightModernVowels) {
  const SchemeTable &t = SchemeTable::Default();
  EXPECT_EQ(t.mt_vowels(),
            (Letters{"a", "e", "ı", "i", "o", "ö", "u", "ü"}));
  EXPECT_EQ(Polyphonic().mt_vowels().size(), 8u);
}

TEST(SchemeTable, StripKeepsLongVowels) {
  const auto &strip = SchemeTable::Default().diacritic_strip();
  for (const char *v : {"â", "î", "û"}) {
    auto it = strip.find(v);
    EXPECT_TRUE(it == strip.end() || it->second == v) << v;
  }
}

TEST(SchemeTable, UnknownLetter) {
  try {
    OtLetterCandidates("x", SchemeTable::Default());
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownLetter);
  }
}

TEST(SchemeTable, MalformedJson) {
  EXPECT_THROW(SchemeTable::FromJson("{"), Error);
  EXPECT_THROW(SchemeTable::FromJson(R"({"letters": {"ب": "b"}})"), Error);
}

TEST(SchemeTable, EveryLetterHasAlternatives) {
  for (const auto &[letter, alts] : SchemeTable::Default().ot_to_latin()) {
    EXPECT_FALSE(alts.empty()) << letter;
    EXPECT_EQ(Graphemes(letter).size(), 1u) << letter;
  }
}

TEST(SchemeId, Parse) {
  EXPECT_EQ(SchemeId::Parse("IA"), SchemeId::Ia());
  EXPECT_EQ(SchemeId::Parse("loose"), SchemeId::Loose());
  EXPECT_EQ(SchemeId::Parse("mine").kind(), SchemeId::Kind::kCustom);
}

TEST(ConvertScheme, IaToLoose) {
  const SchemeTable &t = SchemeTable::Default();
  auto conv = [&](std::string_view s) {
    return ConvertScheme(s, SchemeId::Ia(), SchemeId::Loose(), t);
  };
  EXPECT_EQ(conv("gavuruñ"), "gavurun");
  EXPECT_EQ(conv("ḳahve"), "kahve");
  EXPECT_EQ(conv("kitâb"), "kitâb");
  EXPECT_EQ(conv("Ḳāḍī"), "Kâdî");
  EXPECT_EQ(conv("şa'âtleri"), "şa'âtleri");
}

TEST(ConvertScheme, IdempotentAndIdentity) {
  const SchemeTable &t = SchemeTable::Default();
  const std::string s = "ṣoñra ʿilm ḫāne";
  const std::string once = ConvertScheme(s, SchemeId::Ia(), SchemeId::Loose(), t);
  EXPECT_EQ(ConvertScheme(once, SchemeId::Ia(), SchemeId::Loose(), t), once);
  EXPECT_EQ(ConvertScheme(s, SchemeId::Ia(), SchemeId::Ia(), t), Nfc(s));
  EXPECT_THROW(ConvertScheme(s, SchemeId::Loose(), SchemeId::Ia(), t), Error);
}

TEST(ValidateSchemeText, LooseAndIa) {
  const SchemeTable &t = SchemeTable::Default();
  EXPECT_TRUE(ValidateSchemeText("oldu", SchemeId::Loose(), t).empty());
  auto d = ValidateSchemeText("gavuruñ", SchemeId::Loose(), t);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], (SchemeDiagnostic{1, 7, "ñ"}));
  EXPECT_TRUE(ValidateSchemeText("ñuruvag", SchemeId::Ia(), t).empty());
  auto multi = ValidateSchemeText("ok\nxḳ", SchemeId::Loose(), t);
  ASSERT_EQ(multi.size(), 1u);
  EXPECT_EQ(multi[0], (SchemeDiagnostic{2, 2, "ḳ"}));
}

TEST(ValidateSchemeText, CustomScheme) {
  SchemeTable t = SchemeTable::FromJson(R"({
    "letters": {"ب": ["b"]}, "mt_vowels": ["a"],
    "schemes": {"tiny": {"alphabet": "ab"}}})");
  EXPECT_TRUE(ValidateSchemeText("ab ba", SchemeId::Custom("tiny"), t).empty());
  EXPECT_EQ(ValidateSchemeText("abc", SchemeId::Custom("tiny"), t).size(), 1u);
  EXPECT_THROW(ValidateSchemeText("a", SchemeId::Custom("other"), t), Error);
}

}  // namespace
}  // namespace otkit
