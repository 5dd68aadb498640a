#include "otkit/romanizer.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <unordered_set>
#include <utility>

#include "otkit/error.h"
#include "otkit/unicode.h"

namespace otkit {
namespace {

// One generation step; traces are rebuilt from the parent links at the end.
struct StepNode {
  int parent;
  bool inserted;
  std::size_t pos;   // letter index
  std::size_t rank;  // alternative or vowel index
};

struct Hypothesis {
  std::string surface;
  int node = -1;
  double score = 0.0;
  std::size_t insertions = 0;
  bool ends_consonant = false;
};

bool IsConsonantGrapheme(std::string_view g, const SchemeTable &table) {
  return !g.empty() && !table.IsMtVowel(g) && !IsNeutralGrapheme(g);
}

bool StartsWithConsonant(std::string_view s, const SchemeTable &table) {
  if (s.empty()) return false;
  std::vector<std::string> gs = Graphemes(s);
  return IsConsonantGrapheme(gs.front(), table);
}

bool EndsWithConsonant(std::string_view s, const SchemeTable &table) {
  if (s.empty()) return false;
  std::vector<std::string> gs = Graphemes(s);
  return IsConsonantGrapheme(gs.back(), table);
}

bool Better(const Hypothesis &a, const Hypothesis &b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.surface != b.surface) return a.surface < b.surface;
  return a.insertions < b.insertions;
}

// Keeps the best hypothesis per (surface, insertions), then shares the beam
// equally among insertion counts so that heavily epenthesized variants cannot
// crowd out readings with few inserted vowels. Within a share, hypotheses the
// lexicon could still complete come first. Returns true when anything beyond
// duplicates was discarded.
bool Prune(std::vector<Hypothesis> &hyps, std::size_t beam,
           std::size_t max_insertions, const Lexicon *lexicon) {
  std::sort(hyps.begin(), hyps.end(), Better);
  const std::size_t per_stratum = std::max<std::size_t>(1, beam / (max_insertions + 1));
  std::vector<std::size_t> taken(max_insertions + 1, 0);
  std::vector<Hypothesis> kept;
  std::unordered_set<std::string> seen;
  bool truncated = false;
  auto take = [&](Hypothesis &h) {
    if (taken[h.insertions] == per_stratum) {
      truncated = true;
      return;
    }
    ++taken[h.insertions];
    kept.push_back(std::move(h));
  };
  std::vector<Hypothesis *> rest;
  for (auto &h : hyps) {
    if (!seen.insert(h.surface + '\0' + std::to_string(h.insertions)).second)
      continue;
    if (lexicon != nullptr && !lexicon->MayLeadTo(h.surface))
      rest.push_back(&h);
    else
      take(h);
  }
  for (Hypothesis *h : rest) take(*h);
  if (lexicon != nullptr) std::sort(kept.begin(), kept.end(), Better);
  hyps = std::move(kept);
  return truncated;
}

// Word-initial alternatives apply at position 0 when the table has them.
const std::vector<std::string> &AlternativesAt(const OtWord &word,
                                               std::size_t i,
                                               const SchemeTable &table) {
  if (i == 0) {
    if (const auto *initial = table.InitialCandidates(word.letters()[0]))
      return *initial;
  }
  return table.Candidates(word.letters()[i]);
}

bool SilentAllowed(const OtWord &word, std::size_t i, const SchemeTable &table) {
  return i == 0 && word.size() > 1 && table.IsVowelLetter(word.letters()[1]);
}

// Copies of `base` with each MT vowel appended as an inserted vowel; empty
// when `base` does not end in a consonant or has used its insertions.
std::vector<Hypothesis> WithInsertedVowel(const Hypothesis &base,
                                          std::size_t pos,
                                          std::size_t max_insertions,
                                          const SchemeTable &table,
                                          std::vector<StepNode> &nodes) {
  std::vector<Hypothesis> out;
  if (!base.ends_consonant || base.insertions >= max_insertions) return out;
  const double log_penalty = std::log(kInsertionPenalty);
  const auto &vowels = table.mt_vowels();
  for (std::size_t v = 0; v < vowels.size(); ++v) {
    Hypothesis h = base;
    h.surface += vowels[v];
    nodes.push_back({base.node, true, pos, v});
    h.node = static_cast<int>(nodes.size()) - 1;
    h.score += log_penalty;
    h.insertions += 1;
    h.ends_consonant = false;
    out.push_back(std::move(h));
  }
  return out;
}

}  // namespace

OtWord OtWord::Parse(std::string_view text, const SchemeTable &table) {
  std::string nfc = Nfc(text);
  OtWord word;
  for (const std::string &cp : CodePoints(nfc)) {
    if (!table.Contains(cp))
      throw Error(ErrorCode::kUnknownLetter,
                  "'" + cp + "' in '" + nfc + "' is not in the OT alphabet");
    word.letters_.push_back(cp);
  }
  if (word.letters_.empty())
    throw Error(ErrorCode::kInvalidArgument, "empty OT word");
  return word;
}

std::string OtWord::str() const {
  std::string out;
  for (const auto &l : letters_) out += l;
  return out;
}

std::size_t GenLimits::InsertionsFor(const OtWord &word) const {
  return max_insertions ? *max_insertions : (word.size() + 1) / 2;
}

namespace {

// Beam search over substitutions and inserted vowels. A lexicon, when given,
// only reorders which hypotheses the beam keeps.
GenerationResult Generate(const OtWord &word, const SchemeTable &table,
                          const GenLimits &limits, const Lexicon *lexicon) {
  if (limits.beam == 0 || limits.max_candidates == 0)
    throw Error(ErrorCode::kInvalidArgument,
                "beam and max candidates must be positive");
  const std::size_t max_ins = limits.InsertionsFor(word);
  GenerationResult result;

  std::vector<StepNode> nodes;
  std::vector<Hypothesis> beam(1);
  for (std::size_t i = 0; i < word.size(); ++i) {
    const std::vector<std::string> &alts = AlternativesAt(word, i, table);
    const bool silent_ok = SilentAllowed(word, i, table);
    std::vector<char> starts_c(alts.size()), ends_c(alts.size());
    for (std::size_t r = 0; r < alts.size(); ++r) {
      starts_c[r] = StartsWithConsonant(alts[r], table);
      ends_c[r] = EndsWithConsonant(alts[r], table);
    }
    std::vector<Hypothesis> next;
    for (const Hypothesis &h : beam) {
      for (std::size_t r = 0; r < alts.size(); ++r) {
        const std::string &alt = alts[r];
        if (alt.empty() && !silent_ok) continue;
        const double w = std::log(1.0 / static_cast<double>(r + 1));
        auto extend = [&](Hypothesis base) {
          base.surface += alt;
          nodes.push_back({base.node, false, i, r});
          base.node = static_cast<int>(nodes.size()) - 1;
          base.score += w;
          if (!alt.empty()) base.ends_consonant = ends_c[r];
          next.push_back(std::move(base));
        };
        extend(h);
        if (starts_c[r]) {
          for (auto &ih : WithInsertedVowel(h, i, max_ins, table, nodes))
            extend(std::move(ih));
        }
      }
    }
    result.truncated |= Prune(next, limits.beam, max_ins, lexicon);
    beam = std::move(next);
  }

  // Word-final vowel after a consonant.
  std::vector<Hypothesis> finals;
  for (const Hypothesis &h : beam) {
    finals.push_back(h);
    for (auto &ih : WithInsertedVowel(h, word.size(), max_ins, table, nodes))
      finals.push_back(std::move(ih));
  }
  result.truncated |= Prune(finals, limits.beam, max_ins, lexicon);

  std::set<std::string> surfaces;
  for (auto &h : finals) {
    if (!surfaces.insert(h.surface).second) continue;
    Candidate c;
    c.surface = std::move(h.surface);
    for (int n = h.node; n >= 0; n = nodes[n].parent) {
      const StepNode &step = nodes[n];
      if (step.inserted) {
        const std::string &v = table.mt_vowels()[step.rank];
        c.trace.push_back({TraceKind::kInsertedVowel, {}, v, step.rank});
      } else {
        c.trace.push_back({TraceKind::kSubstitution, word.letters()[step.pos],
                           AlternativesAt(word, step.pos, table)[step.rank],
                           step.rank});
      }
    }
    std::reverse(c.trace.begin(), c.trace.end());
    c.gen_score = h.score;
    c.total = h.score;
    result.candidates.push_back(std::move(c));
  }
  return result;
}

}  // namespace

GenerationResult GenerateCandidates(const OtWord &word,
                                    const SchemeTable &table,
                                    const GenLimits &limits) {
  return Generate(word, table, limits, nullptr);
}

bool IsCharacterAccurate(const Candidate &candidate, const OtWord &word,
                         const SchemeTable &table) {
  std::string rebuilt;
  std::size_t pos = 0;
  for (const TraceStep &step : candidate.trace) {
    rebuilt += step.output;
    if (step.kind == TraceKind::kInsertedVowel) {
      if (!table.IsMtVowel(step.output)) return false;
      continue;
    }
    if (step.kind != TraceKind::kSubstitution) return false;
    if (pos >= word.size() || step.letter != word.letters()[pos]) return false;
    const std::vector<std::string> &alts = AlternativesAt(word, pos, table);
    if (std::find(alts.begin(), alts.end(), step.output) == alts.end())
      return false;
    ++pos;
  }
  return pos == word.size() && rebuilt == candidate.surface;
}

std::vector<Candidate> Romanize(const OtWord &word, const SchemeTable &table,
                                const Lexicon &lexicon,
                                const ExceptionLexicon &exceptions,
                                const NgramModel *lm,
                                const RomanizeOptions &options,
                                std::span<const std::string> history) {
  if (auto conventional = exceptions.Lookup(word.str())) {
    Candidate c;
    c.surface = *conventional;
    c.trace.push_back({TraceKind::kException, word.str(), *conventional, 0});
    return {c};
  }

  GenerationResult generated = Generate(word, table, options.limits, &lexicon);
  std::vector<Candidate> kept;
  for (const Candidate &c : generated.candidates) {
    if (lexicon.Contains(c.surface) || !StripAffixes(c.surface, lexicon).empty())
      kept.push_back(c);
  }
  if (kept.empty()) kept = std::move(generated.candidates);

  if (lm != nullptr) {
    kept = Rescore(std::move(kept), *lm, options.rescore, history);
  } else {
    for (Candidate &c : kept) c.total = c.gen_score;
    RankCandidates(kept);
  }
  if (kept.size() > options.limits.max_candidates)
    kept.resize(options.limits.max_candidates);
  return kept;
}

}  // namespace otkit
