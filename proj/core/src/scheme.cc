#include "otkit/scheme.h"

#include <algorithm>
#include <cctype>

#include <json.hpp>

#include "embedded_data.h"
#include "otkit/error.h"
#include "otkit/file_io.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

using nlohmann::json;

[[noreturn]] void Malformed(const std::string &what) {
  throw Error(ErrorCode::kMalformedData, "scheme table: " + what);
}

std::vector<std::string> StringArray(const json &j, const std::string &what) {
  if (!j.is_array()) Malformed(what + " must be an array");
  std::vector<std::string> out;
  for (const auto &v : j) {
    if (!v.is_string()) Malformed(what + " must contain strings");
    out.push_back(Nfc(v.get<std::string>()));
  }
  return out;
}

std::string SingleLetter(const std::string &key, const std::string &what) {
  std::string letter = Nfc(key);
  if (CodePoints(letter).size() != 1)
    Malformed(what + " key '" + key + "' is not a single code point");
  return letter;
}

std::set<std::string> GraphemeSet(const std::string &s) {
  std::vector<std::string> g = Graphemes(s);
  return {g.begin(), g.end()};
}

}  // namespace

SchemeId SchemeId::Parse(std::string_view name) {
  std::string lower;
  for (char c : name)
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "ia") return Ia();
  if (lower == "loose") return Loose();
  if (lower.empty()) throw Error(ErrorCode::kUnknownScheme, "empty scheme name");
  return Custom(std::string(name));
}

SchemeTable SchemeTable::FromJson(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    Malformed(e.what());
  }
  if (!doc.is_object()) Malformed("top level must be an object");
  if (doc.contains("format") && doc["format"] != "otkit-scheme")
    Malformed("format must be \"otkit-scheme\"");
  if (doc.contains("version") && doc["version"] != 1) Malformed("unsupported version");

  SchemeTable t;
  if (!doc.contains("letters") || !doc["letters"].is_object())
    Malformed("missing \"letters\" object");
  for (const auto &[key, value] : doc["letters"].items()) {
    std::string letter = SingleLetter(key, "letters");
    std::vector<std::string> alts = StringArray(value, "letters." + key);
    if (alts.empty()) Malformed("letters." + key + " has no alternatives");
    for (const auto &a : alts)
      if (a.empty()) Malformed("letters." + key + " has an empty alternative");
    t.ot_to_latin_[letter] = std::move(alts);
  }
  if (doc.contains("aliases")) {
    for (const auto &[key, value] : doc["aliases"].items()) {
      if (!value.is_string()) Malformed("aliases values must be strings");
      std::string target = Nfc(value.get<std::string>());
      if (!t.ot_to_latin_.count(target))
        Malformed("alias target '" + target + "' is not a letter");
      t.aliases_[SingleLetter(key, "aliases")] = target;
    }
  }
  if (doc.contains("word_initial")) {
    for (const auto &[key, value] : doc["word_initial"].items()) {
      std::string letter = SingleLetter(key, "word_initial");
      if (!t.ot_to_latin_.count(letter))
        Malformed("word_initial letter '" + letter + "' is not a letter");
      t.word_initial_[letter] = StringArray(value, "word_initial." + key);
    }
  }
  if (doc.contains("vowel_letters")) {
    for (auto &v : StringArray(doc["vowel_letters"], "vowel_letters"))
      t.vowel_letters_.insert(t.Canonical(v));
  }
  t.mt_vowels_ = StringArray(doc.value("mt_vowels", json::array()), "mt_vowels");
  t.all_vowels_.insert(t.mt_vowels_.begin(), t.mt_vowels_.end());
  for (auto &v : StringArray(doc.value("long_vowels", json::array()),
                             "long_vowels"))
    t.all_vowels_.insert(v);

  if (doc.contains("strip")) {
    for (const auto &[key, value] : doc["strip"].items()) {
      if (!value.is_string()) Malformed("strip values must be strings");
      t.diacritic_strip_[Nfc(key)] = Nfc(value.get<std::string>());
    }
  }
  t.loose_alphabet_ = GraphemeSet(doc.value("loose_alphabet", std::string()));
  t.ia_alphabet_ = t.loose_alphabet_;
  for (const auto &[marked, plain] : t.diacritic_strip_)
    t.ia_alphabet_.insert(marked);

  if (doc.contains("schemes")) {
    for (const auto &[name, spec] : doc["schemes"].items()) {
      if (!spec.is_object() || !spec.contains("alphabet") ||
          !spec["alphabet"].is_string())
        Malformed("schemes." + name + " needs an \"alphabet\" string");
      t.custom_alphabets_[name] =
          GraphemeSet(spec["alphabet"].get<std::string>());
    }
  }
  return t;
}

SchemeTable SchemeTable::LoadFile(const std::filesystem::path &path) {
  try {
    return FromJson(ReadFile(path));
  } catch (const Error &e) {
    if (e.code() == ErrorCode::kIo) throw;
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

const SchemeTable &SchemeTable::Default() {
  static const SchemeTable table = FromJson(embedded::kSchemeJson);
  return table;
}

std::string SchemeTable::Canonical(std::string_view letter) const {
  std::string key = Nfc(letter);
  auto it = aliases_.find(key);
  return it == aliases_.end() ? key : it->second;
}

bool SchemeTable::Contains(std::string_view letter) const {
  return ot_to_latin_.count(Canonical(letter)) > 0;
}

const std::vector<std::string> &SchemeTable::Candidates(
    std::string_view letter) const {
  auto it = ot_to_latin_.find(Canonical(letter));
  if (it == ot_to_latin_.end())
    throw Error(ErrorCode::kUnknownLetter,
                "'" + std::string(letter) + "' is not in the OT alphabet");
  return it->second;
}

const std::vector<std::string> *SchemeTable::InitialCandidates(
    std::string_view letter) const {
  auto it = word_initial_.find(Canonical(letter));
  return it == word_initial_.end() ? nullptr : &it->second;
}

bool SchemeTable::IsVowelLetter(std::string_view letter) const {
  return vowel_letters_.count(Canonical(letter)) > 0;
}

bool SchemeTable::IsMtVowel(std::string_view grapheme) const {
  return all_vowels_.count(std::string(grapheme)) > 0;
}

bool SchemeTable::InAlphabet(const SchemeId &scheme,
                             std::string_view grapheme) const {
  const std::set<std::string> *alphabet = nullptr;
  switch (scheme.kind()) {
    case SchemeId::Kind::kIa: alphabet = &ia_alphabet_; break;
    case SchemeId::Kind::kLoose: alphabet = &loose_alphabet_; break;
    case SchemeId::Kind::kCustom: {
      auto it = custom_alphabets_.find(scheme.name());
      if (it == custom_alphabets_.end())
        throw Error(ErrorCode::kUnknownScheme,
                    "no alphabet declared for scheme '" + scheme.name() + "'");
      alphabet = &it->second;
      break;
    }
  }
  return alphabet->count(std::string(grapheme)) > 0 ||
         IsNeutralGrapheme(grapheme);
}

std::vector<std::string> OtLetterCandidates(std::string_view letter,
                                            const SchemeTable &table) {
  return table.Candidates(letter);
}

std::string ConvertScheme(std::string_view text, const SchemeId &from,
                          const SchemeId &to, const SchemeTable &table) {
  if (from == to) return Nfc(text);
  if (from.kind() != SchemeId::Kind::kIa ||
      to.kind() != SchemeId::Kind::kLoose)
    throw Error(ErrorCode::kUnknownScheme,
                "unsupported conversion " + from.name() + " -> " + to.name());
  std::string out;
  out.reserve(text.size());
  for (const auto &g : Graphemes(text)) {
    auto it = table.diacritic_strip().find(g);
    out += it == table.diacritic_strip().end() ? g : it->second;
  }
  return out;
}

std::vector<SchemeDiagnostic> ValidateSchemeText(std::string_view text,
                                                 const SchemeId &scheme,
                                                 const SchemeTable &table) {
  std::vector<SchemeDiagnostic> diags;
  std::vector<std::string> lines = SplitLines(text);
  for (std::size_t li = 0; li < lines.size(); ++li) {
    std::vector<std::string> gs = Graphemes(lines[li]);
    for (std::size_t ci = 0; ci < gs.size(); ++ci) {
      if (!table.InAlphabet(scheme, gs[ci]))
        diags.push_back({li + 1, ci + 1, gs[ci]});
    }
  }
  return diags;
}

}  // namespace otkit
