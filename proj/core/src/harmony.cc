#include "otkit/morphology.h"

#include <array>

#include "otkit/error.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

struct VowelRow {
  std::string_view grapheme;
  VowelFeatures features;
};

// back, rounded, high
constexpr std::array<VowelRow, 22> kVowels = {{
    {"a", {true, false, false}},  {"ı", {true, false, true}},
    {"o", {true, true, false}},   {"u", {true, true, true}},
    {"e", {false, false, false}}, {"i", {false, false, true}},
    {"ö", {false, true, false}},  {"ü", {false, true, true}},
    {"â", {true, false, false}},  {"î", {false, false, true}},
    {"û", {true, true, true}},
    {"A", {true, false, false}},  {"I", {true, false, true}},
    {"O", {true, true, false}},   {"U", {true, true, true}},
    {"E", {false, false, false}}, {"İ", {false, false, true}},
    {"Ö", {false, true, false}},  {"Ü", {false, true, true}},
    {"Â", {true, false, false}},  {"Î", {false, false, true}},
    {"Û", {true, true, true}},
}};

constexpr std::array<std::string_view, 16> kVoiceless = {
    "p", "ç", "t", "k", "f", "h", "s", "ş",
    "P", "Ç", "T", "K", "F", "H", "S", "Ş"};

std::string_view RealizeA(const VowelFeatures &last) {
  return last.back ? "a" : "e";
}

std::string_view RealizeI(const VowelFeatures &last) {
  if (last.back) return last.rounded ? "u" : "ı";
  return last.rounded ? "ü" : "i";
}

void ExpandRealizations(const std::vector<AffixTemplate::Segment> &segs,
                        std::size_t i, std::string prefix,
                        std::set<std::string> &out) {
  using Kind = AffixTemplate::SegmentKind;
  if (i == segs.size()) {
    if (!prefix.empty()) out.insert(prefix);
    return;
  }
  switch (segs[i].kind) {
    case Kind::kFixed:
      ExpandRealizations(segs, i + 1, prefix + segs[i].fixed, out);
      break;
    case Kind::kA:
      for (std::string_view v : {"a", "e"})
        ExpandRealizations(segs, i + 1, prefix + std::string(v), out);
      break;
    case Kind::kOptionalI:
      ExpandRealizations(segs, i + 1, prefix, out);
      [[fallthrough]];
    case Kind::kI:
      for (std::string_view v : {"ı", "i", "u", "ü"})
        ExpandRealizations(segs, i + 1, prefix + std::string(v), out);
      break;
    case Kind::kD:
      for (std::string_view v : {"d", "t"})
        ExpandRealizations(segs, i + 1, prefix + std::string(v), out);
      break;
  }
}

std::optional<VowelFeatures> LastVowel(const std::vector<std::string> &gs) {
  for (auto it = gs.rbegin(); it != gs.rend(); ++it)
    if (auto f = VowelFeaturesOf(*it)) return f;
  return std::nullopt;
}

}  // namespace

AffixTemplate AffixTemplate::Parse(std::string_view notation) {
  std::string_view body = notation;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  if (body.empty())
    throw Error(ErrorCode::kMalformedData, "empty affix template");
  AffixTemplate t;
  t.notation_ = std::string(body);
  std::vector<std::string> gs = Graphemes(body);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const std::string &g = gs[i];
    if (g == "(") {
      if (i + 2 >= gs.size() || gs[i + 1] != "I" || gs[i + 2] != ")")
        throw Error(ErrorCode::kMalformedData,
                    "only (I) may be optional in '" + t.notation_ + "'");
      t.segments_.push_back({SegmentKind::kOptionalI, {}});
      i += 2;
    } else if (g == "A") {
      t.segments_.push_back({SegmentKind::kA, {}});
    } else if (g == "I") {
      t.segments_.push_back({SegmentKind::kI, {}});
    } else if (g == "D") {
      t.segments_.push_back({SegmentKind::kD, {}});
    } else if (g.size() == 1 && g[0] >= 'A' && g[0] <= 'Z') {
      throw Error(ErrorCode::kMalformedData,
                  "unknown archiphoneme '" + g + "' in '" + t.notation_ + "'");
    } else {
      t.segments_.push_back({SegmentKind::kFixed, g});
    }
  }
  ExpandRealizations(t.segments_, 0, "", t.realizations_);
  return t;
}

std::optional<VowelFeatures> VowelFeaturesOf(std::string_view grapheme) {
  for (const auto &row : kVowels)
    if (row.grapheme == grapheme) return row.features;
  return std::nullopt;
}

bool IsVoicelessConsonant(std::string_view grapheme) {
  for (auto v : kVoiceless)
    if (v == grapheme) return true;
  return false;
}

std::string ApplyHarmony(std::string_view stem,
                         std::span<const AffixTemplate> chain) {
  using Kind = AffixTemplate::SegmentKind;
  std::vector<std::string> word = Graphemes(stem);
  auto last_vowel = [&](const AffixTemplate &affix) {
    auto f = LastVowel(word);
    if (!f)
      throw Error(ErrorCode::kNoVowelInStem,
                  "'" + std::string(stem) + "' has no vowel to harmonize -" +
                      affix.notation() + " with");
    return *f;
  };
  for (const AffixTemplate &affix : chain) {
    for (const auto &seg : affix.segments()) {
      switch (seg.kind) {
        case Kind::kFixed:
          word.push_back(seg.fixed);
          break;
        case Kind::kA:
          word.emplace_back(RealizeA(last_vowel(affix)));
          break;
        case Kind::kI:
          word.emplace_back(RealizeI(last_vowel(affix)));
          break;
        case Kind::kOptionalI:
          if (!word.empty() && !VowelFeaturesOf(word.back()))
            word.emplace_back(RealizeI(last_vowel(affix)));
          break;
        case Kind::kD:
          word.emplace_back(
              !word.empty() && IsVoicelessConsonant(word.back()) ? "t" : "d");
          break;
      }
    }
  }
  std::string out;
  for (const auto &g : word) out += g;
  return out;
}

bool CheckVowelHarmony(std::string_view word) {
  std::optional<VowelFeatures> prev;
  for (const auto &g : Graphemes(word)) {
    auto cur = VowelFeaturesOf(g);
    if (!cur) continue;
    if (prev) {
      if (cur->back != prev->back) return false;
      if (cur->high && cur->rounded != prev->rounded) return false;
    }
    prev = cur;
  }
  return true;
}

}  // namespace otkit
