// Transcription schemes: the Ottoman Turkish letter to Modern Turkish
// grapheme correspondence table, and the IA / loose Latin conventions.
//
// Tables are data. The default table is compiled in from
// core/data/ot_alphabet.json; any file in the same format can replace it.
//
//   {
//     "format": "otkit-scheme", "version": 1,
//     "letters":       { "<OT letter>": ["<MT grapheme>", ...], ... },
//     "aliases":       { "<variant letter>": "<letter>", ... },
//     "word_initial":  { "<OT letter>": ["<MT grapheme>", ...] },
//     "vowel_letters": ["ا", "و", "ی"],
//     "mt_vowels":     ["a", "e", "ı", "i", "o", "ö", "u", "ü"],
//     "long_vowels":   ["â", "î", "û"],
//     "loose_alphabet": "<graphemes>",
//     "strip":         { "<IA grapheme>": "<loose grapheme or empty>" },
//     "schemes":       { "<custom name>": { "alphabet": "<graphemes>" } }
//   }
//
// Only "letters" is required; "format" and "version" are checked when
// present.
//
// Alternative order is a generation priority, not a correctness claim.

#ifndef OTKIT_SCHEME_H_
#define OTKIT_SCHEME_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace otkit {

class SchemeId {
 public:
  enum class Kind { kIa, kLoose, kCustom };

  static SchemeId Ia() { return SchemeId(Kind::kIa, "ia"); }
  static SchemeId Loose() { return SchemeId(Kind::kLoose, "loose"); }
  static SchemeId Custom(std::string name) {
    return SchemeId(Kind::kCustom, std::move(name));
  }
  // "ia" and "loose" (case-insensitive) map to the built-ins; any other
  // non-empty name is a custom scheme.
  static SchemeId Parse(std::string_view name);

  Kind kind() const { return kind_; }
  const std::string &name() const { return name_; }

  bool operator==(const SchemeId &) const = default;

 private:
  SchemeId(Kind kind, std::string name) : kind_(kind), name_(std::move(name)) {}
  Kind kind_;
  std::string name_;
};

class SchemeTable {
 public:
  static SchemeTable FromJson(std::string_view json_text);
  static SchemeTable LoadFile(const std::filesystem::path &path);
  // The compiled-in table.
  static const SchemeTable &Default();

  // Alternatives for an OT letter (aliases resolved). Throws UnknownLetter.
  const std::vector<std::string> &Candidates(std::string_view letter) const;
  // Word-initial alternatives, or nullptr when the letter has none. An empty
  // string alternative marks a silent vowel carrier.
  const std::vector<std::string> *InitialCandidates(
      std::string_view letter) const;

  bool Contains(std::string_view letter) const;
  // Resolves aliases; returns the input unchanged if it is not an alias.
  std::string Canonical(std::string_view letter) const;
  bool IsVowelLetter(std::string_view letter) const;

  // Short vowels plus long (circumflex) vowels.
  bool IsMtVowel(std::string_view grapheme) const;

  const std::map<std::string, std::vector<std::string>> &ot_to_latin() const {
    return ot_to_latin_;
  }
  const std::vector<std::string> &mt_vowels() const { return mt_vowels_; }
  const std::set<std::string> &vowel_letters() const { return vowel_letters_; }
  const std::map<std::string, std::string> &diacritic_strip() const {
    return diacritic_strip_;
  }

  // Grapheme membership for a scheme. Whitespace, punctuation, symbols and
  // digits are accepted by every scheme. Throws UnknownScheme for an
  // undeclared custom scheme.
  bool InAlphabet(const SchemeId &scheme, std::string_view grapheme) const;

 private:
  std::map<std::string, std::vector<std::string>> ot_to_latin_;
  std::map<std::string, std::vector<std::string>> word_initial_;
  std::map<std::string, std::string> aliases_;
  std::set<std::string> vowel_letters_;
  std::vector<std::string> mt_vowels_;
  std::set<std::string> all_vowels_;
  std::map<std::string, std::string> diacritic_strip_;
  std::set<std::string> loose_alphabet_;
  std::set<std::string> ia_alphabet_;
  std::map<std::string, std::set<std::string>> custom_alphabets_;
};

// Returns the ordered alternative set for one OT letter.
std::vector<std::string> OtLetterCandidates(std::string_view letter,
                                            const SchemeTable &table);

// IA -> Loose: strips disambiguating diacritics, keeps long-vowel
// circumflexes, drops ayn/hamza marks. Idempotent. Identity when from == to;
// any other direction throws UnknownScheme.
std::string ConvertScheme(std::string_view text, const SchemeId &from,
                          const SchemeId &to, const SchemeTable &table);

struct SchemeDiagnostic {
  std::size_t line;    // 1-based
  std::size_t column;  // 1-based, in grapheme clusters
  std::string grapheme;

  bool operator==(const SchemeDiagnostic &) const = default;
};

// One diagnostic per grapheme outside the scheme's alphabet.
std::vector<SchemeDiagnostic> ValidateSchemeText(std::string_view text,
                                                 const SchemeId &scheme,
                                                 const SchemeTable &table);

}  // namespace otkit

#endif  // OTKIT_SCHEME_H_
