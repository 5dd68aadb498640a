// Modern Turkish suffix templates and vowel harmony.
//
// Suffixes are written in archiphoneme notation:
//   A    two-fold vowel, a after a back vowel, e after a front vowel
//   I    four-fold vowel, ı / u / i / ü by backness and rounding
//   D    d, or t after a voiceless consonant
//   (I)  an I that only surfaces after a consonant
// Lowercase letters are fixed. "DI" is the past tense, "lAr" the plural,
// "(I)ncI" the ordinal.

#ifndef OTKIT_MORPHOLOGY_H_
#define OTKIT_MORPHOLOGY_H_

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace otkit {

class AffixTemplate {
 public:
  enum class SegmentKind { kFixed, kA, kI, kD, kOptionalI };
  struct Segment {
    SegmentKind kind;
    std::string fixed;  // grapheme, kFixed only

    bool operator==(const Segment &) const = default;
  };

  // Accepts an optional leading '-'. Throws MalformedData for archiphonemes
  // other than A, I, D.
  static AffixTemplate Parse(std::string_view notation);

  const std::string &notation() const { return notation_; }
  const std::vector<Segment> &segments() const { return segments_; }

  // Every surface string the template can realize as, ignoring harmony.
  const std::set<std::string> &realizations() const { return realizations_; }

  bool operator==(const AffixTemplate &o) const {
    return notation_ == o.notation_;
  }

 private:
  std::string notation_;
  std::vector<Segment> segments_;
  std::set<std::string> realizations_;
};

struct VowelFeatures {
  bool back;
  bool rounded;
  bool high;
};

// Features of a Modern Turkish vowel grapheme (including â, î, û and the
// capitals), or nullopt for anything else.
std::optional<VowelFeatures> VowelFeaturesOf(std::string_view grapheme);

bool IsVoicelessConsonant(std::string_view grapheme);

// Realizes each suffix in order against the growing word. Throws
// NoVowelInStem when a harmonizing vowel has no preceding vowel.
std::string ApplyHarmony(std::string_view stem,
                         std::span<const AffixTemplate> chain);

// True iff each vowel after the first agrees in backness with the vowel
// before it, and each high vowel also agrees in rounding.
bool CheckVowelHarmony(std::string_view word);

}  // namespace otkit

#endif  // OTKIT_MORPHOLOGY_H_
