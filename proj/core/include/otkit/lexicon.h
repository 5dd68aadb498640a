// Modern Turkish stem/form inventory, suffix stripping, and the table of
// conventional readings that override character-accurate romanization.
//
// Lexicon files are UTF-8 text, one entry per line:
//   gel              a stem
//   geldiler<TAB>full    an attested full form (inflected loans included)
//   -lAr<TAB>affix       an extra suffix template
// Blank lines and lines starting with '#' are ignored.
//
// Exception files hold "<OT word><TAB><MT surface>" lines.

#ifndef OTKIT_LEXICON_H_
#define OTKIT_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "otkit/morphology.h"

namespace otkit {

// Lowercases with Turkish casing rules (I -> ı, İ -> i) and applies NFC.
std::string LowercaseTurkish(std::string_view text);

class Lexicon {
 public:
  // Empty stem/form sets with the starter suffix inventory.
  Lexicon();

  static Lexicon FromTsv(std::string_view text, bool starter_affixes = true);
  static Lexicon LoadFile(const std::filesystem::path &path,
                          bool starter_affixes = true);

  // The shipped suffix set: -DI, -lAr, -(I)ncI, -In, -DA, -DAn.
  static std::vector<AffixTemplate> StarterAffixes();

  void AddStem(std::string_view stem);
  void AddFullForm(std::string_view form);
  void AddAffix(const AffixTemplate &affix);
  void ClearAffixes() { affixes_.clear(); }

  bool HasStem(std::string_view word) const;
  bool HasFullForm(std::string_view word) const;
  bool Contains(std::string_view word) const {
    return HasStem(word) || HasFullForm(word);
  }

  // True when some stem or full form starts with `prefix`, or `prefix`
  // starts with one (suffixes may still follow).
  bool MayLeadTo(std::string_view prefix) const;

  const std::set<std::string> &stems() const { return stems_; }
  const std::set<std::string> &full_forms() const { return full_forms_; }
  const std::vector<AffixTemplate> &affixes() const { return affixes_; }

 private:
  std::set<std::string> stems_;
  std::set<std::string> full_forms_;
  std::vector<AffixTemplate> affixes_;
};

// A stem plus the suffixes peeled off it, innermost first.
struct Segmentation {
  std::string stem;
  std::vector<std::string> affixes;  // template notations

  auto operator<=>(const Segmentation &) const = default;
};

// Every way of peeling suffixes off the end of `surface` that leaves a stem
// or full form from the lexicon. Sorted; empty when nothing matches.
std::vector<Segmentation> StripAffixes(std::string_view surface,
                                       const Lexicon &lexicon);

class ExceptionLexicon {
 public:
  static ExceptionLexicon FromTsv(std::string_view text);
  static ExceptionLexicon LoadFile(const std::filesystem::path &path);
  // The compiled-in list.
  static const ExceptionLexicon &Default();

  void Add(std::string_view ot_word, std::string_view surface);
  std::optional<std::string> Lookup(std::string_view ot_word) const;

  std::size_t size() const { return entries_.size(); }
  const std::map<std::string, std::string> &entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::string> entries_;
};

}  // namespace otkit

#endif  // OTKIT_LEXICON_H_
