// UTF-8 helpers backed by ICU: NFC normalization, extended grapheme cluster
// segmentation and a few character-class predicates.

#ifndef OTKIT_UNICODE_H_
#define OTKIT_UNICODE_H_

#include <string>
#include <string_view>
#include <vector>

namespace otkit {

// Returns the NFC form of a UTF-8 string. Ill-formed sequences are replaced
// by U+FFFD.
std::string Nfc(std::string_view utf8);

// Splits NFC-normalized text into extended grapheme clusters. The input is
// normalized first; concatenating the result gives Nfc(utf8).
std::vector<std::string> Graphemes(std::string_view utf8);

// Splits already-normalized text without normalizing again.
std::vector<std::string> GraphemesOfNormalized(std::string_view nfc_utf8);

// Code points of a UTF-8 string, each re-encoded as its own UTF-8 string.
std::vector<std::string> CodePoints(std::string_view utf8);

std::vector<char32_t> DecodeUtf8(std::string_view utf8);
std::string EncodeUtf8(char32_t cp);

// True iff the grapheme is a single decimal digit: ASCII 0-9 or
// Arabic-Indic U+0660..U+0669.
bool IsDigitGrapheme(std::string_view grapheme);

// True iff the grapheme is one code point of whitespace, punctuation,
// symbol or decimal-digit class.
bool IsNeutralGrapheme(std::string_view grapheme);

// Whitespace-delimited tokens (Unicode White_Space), after NFC.
std::vector<std::string> SplitWhitespace(std::string_view utf8);

// Splits on '\n', dropping one trailing '\r' per line. A trailing newline
// does not produce an extra empty line.
std::vector<std::string> SplitLines(std::string_view text);

}  // namespace otkit

#endif  // OTKIT_UNICODE_H_
