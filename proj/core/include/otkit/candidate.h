#ifndef OTKIT_CANDIDATE_H_
#define OTKIT_CANDIDATE_H_

#include <cstddef>
#include <string>
#include <vector>

namespace otkit {

enum class TraceKind {
  kSubstitution,   // one OT letter realized as one table alternative
  kInsertedVowel,  // an unwritten vowel supplied between consonants
  kException,      // whole-word conventional reading
};

struct TraceStep {
  TraceKind kind;
  std::string letter;  // OT letter (substitution) or OT word (exception)
  std::string output;  // MT graphemes contributed to the surface
  std::size_t rank;    // index among the alternatives / vowels considered

  bool operator==(const TraceStep &) const = default;
};

// A romanization hypothesis. Scores are natural-log values.
struct Candidate {
  std::string surface;
  std::vector<TraceStep> trace;
  double gen_score = 0.0;
  double lm_score = 0.0;
  double total = 0.0;

  bool operator==(const Candidate &) const = default;
};

}  // namespace otkit

#endif  // OTKIT_CANDIDATE_H_
