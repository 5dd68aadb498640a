#include "otkit/lexicon.h"

#include <unicode/locid.h>
#include <unicode/unistr.h>

#include "embedded_data.h"
#include "otkit/error.h"
#include "otkit/file_io.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

constexpr std::size_t kMaxAffixDepth = 4;

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

// Splits "a<TAB>b" into its two trimmed fields; second is empty when absent.
std::pair<std::string_view, std::string_view> SplitTab(std::string_view line) {
  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos) return {Trim(line), {}};
  return {Trim(line.substr(0, tab)), Trim(line.substr(tab + 1))};
}

bool SkipLine(std::string_view line) {
  line = Trim(line);
  return line.empty() || line.front() == '#';
}

void Strip(std::string_view word, const Lexicon &lexicon,
           std::vector<std::string> &outer_first, std::size_t depth,
           std::set<Segmentation> &out) {
  if (lexicon.Contains(word)) {
    out.insert({std::string(word),
                {outer_first.rbegin(), outer_first.rend()}});
  }
  if (depth == kMaxAffixDepth) return;
  for (const AffixTemplate &affix : lexicon.affixes()) {
    for (const std::string &r : affix.realizations()) {
      if (r.size() >= word.size() || !word.ends_with(r)) continue;
      outer_first.push_back(affix.notation());
      Strip(word.substr(0, word.size() - r.size()), lexicon, outer_first,
            depth + 1, out);
      outer_first.pop_back();
    }
  }
}

}  // namespace

std::string LowercaseTurkish(std::string_view text) {
  icu::UnicodeString s = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  s.toLower(icu::Locale("tr"));
  std::string out;
  s.toUTF8String(out);
  return Nfc(out);
}

Lexicon::Lexicon() : affixes_(StarterAffixes()) {}

std::vector<AffixTemplate> Lexicon::StarterAffixes() {
  static const std::vector<AffixTemplate> affixes = [] {
    std::vector<AffixTemplate> out;
    for (const std::string &line : SplitLines(embedded::kAffixesTsv)) {
      if (SkipLine(line)) continue;
      out.push_back(AffixTemplate::Parse(SplitTab(line).first));
    }
    return out;
  }();
  return affixes;
}

Lexicon Lexicon::FromTsv(std::string_view text, bool starter_affixes) {
  Lexicon lex;
  if (!starter_affixes) lex.ClearAffixes();
  std::size_t lineno = 0;
  for (const std::string &line : SplitLines(text)) {
    ++lineno;
    if (SkipLine(line)) continue;
    auto [entry, kind] = SplitTab(line);
    if (kind.empty() || kind == "stem") {
      lex.AddStem(entry);
    } else if (kind == "full") {
      lex.AddFullForm(entry);
    } else if (kind == "affix") {
      lex.AddAffix(AffixTemplate::Parse(entry));
    } else {
      throw Error(ErrorCode::kMalformedData,
                  "lexicon line " + std::to_string(lineno) +
                      ": unknown entry kind '" + std::string(kind) + "'");
    }
  }
  return lex;
}

Lexicon Lexicon::LoadFile(const std::filesystem::path &path,
                          bool starter_affixes) {
  return FromTsv(ReadFile(path), starter_affixes);
}

void Lexicon::AddStem(std::string_view stem) {
  stems_.insert(LowercaseTurkish(stem));
}

void Lexicon::AddFullForm(std::string_view form) {
  full_forms_.insert(LowercaseTurkish(form));
}

void Lexicon::AddAffix(const AffixTemplate &affix) {
  for (const auto &a : affixes_)
    if (a == affix) return;
  affixes_.push_back(affix);
}

bool Lexicon::HasStem(std::string_view word) const {
  return stems_.count(std::string(word)) > 0;
}

bool Lexicon::MayLeadTo(std::string_view prefix) const {
  for (const auto *words : {&stems_, &full_forms_}) {
    auto it = words->lower_bound(std::string(prefix));
    if (it != words->end() && it->starts_with(prefix)) return true;
    for (std::size_t n = 1; n < prefix.size(); ++n)
      if (words->count(std::string(prefix.substr(0, n)))) return true;
  }
  return false;
}

bool Lexicon::HasFullForm(std::string_view word) const {
  return full_forms_.count(std::string(word)) > 0;
}

std::vector<Segmentation> StripAffixes(std::string_view surface,
                                       const Lexicon &lexicon) {
  std::set<Segmentation> found;
  std::vector<std::string> chain;
  Strip(surface, lexicon, chain, 0, found);
  return {found.begin(), found.end()};
}

ExceptionLexicon ExceptionLexicon::FromTsv(std::string_view text) {
  ExceptionLexicon lex;
  std::size_t lineno = 0;
  for (const std::string &line : SplitLines(text)) {
    ++lineno;
    if (SkipLine(line)) continue;
    auto [word, surface] = SplitTab(line);
    if (surface.empty())
      throw Error(ErrorCode::kMalformedData,
                  "exception line " + std::to_string(lineno) +
                      ": expected <OT word><TAB><MT surface>");
    lex.Add(word, surface);
  }
  return lex;
}

ExceptionLexicon ExceptionLexicon::LoadFile(const std::filesystem::path &path) {
  return FromTsv(ReadFile(path));
}

const ExceptionLexicon &ExceptionLexicon::Default() {
  static const ExceptionLexicon lex = FromTsv(embedded::kExceptionsTsv);
  return lex;
}

void ExceptionLexicon::Add(std::string_view ot_word, std::string_view surface) {
  entries_[Nfc(ot_word)] = Nfc(surface);
}

std::optional<std::string> ExceptionLexicon::Lookup(
    std::string_view ot_word) const {
  auto it = entries_.find(Nfc(ot_word));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

}  // namespace otkit
