#include "otkit/unicode.h"

#include <memory>

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "otkit/error.h"

namespace otkit {
namespace {

const icu::Normalizer2 &NfcInstance() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *norm = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status) || norm == nullptr)
    throw Error(ErrorCode::kIo, std::string("ICU NFC unavailable: ") +
                                    u_errorName(status));
  return *norm;
}

// Break iterators are not thread-safe; each thread gets its own clone.
icu::BreakIterator &CharacterBreaker() {
  thread_local std::unique_ptr<icu::BreakIterator> iter = [] {
    UErrorCode status = U_ZERO_ERROR;
    std::unique_ptr<icu::BreakIterator> it(
        icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(),
                                                    status));
    if (U_FAILURE(status))
      throw Error(ErrorCode::kIo, std::string("ICU break iterator: ") +
                                      u_errorName(status));
    return it;
  }();
  return *iter;
}

std::string ToUtf8(const icu::UnicodeString &s) {
  std::string out;
  s.toUTF8String(out);
  return out;
}

icu::UnicodeString FromUtf8(std::string_view utf8) {
  return icu::UnicodeString::fromUTF8(
      icu::StringPiece(utf8.data(), static_cast<int32_t>(utf8.size())));
}

}  // namespace

std::string Nfc(std::string_view utf8) {
  if (utf8.empty()) return {};
  const icu::Normalizer2 &norm = NfcInstance();
  icu::UnicodeString src = FromUtf8(utf8);
  UErrorCode status = U_ZERO_ERROR;
  if (norm.isNormalized(src, status) && U_SUCCESS(status)) return ToUtf8(src);
  status = U_ZERO_ERROR;
  icu::UnicodeString dst = norm.normalize(src, status);
  if (U_FAILURE(status))
    throw Error(ErrorCode::kInvalidArgument,
                std::string("NFC normalization failed: ") + u_errorName(status));
  return ToUtf8(dst);
}

std::vector<std::string> GraphemesOfNormalized(std::string_view nfc_utf8) {
  std::vector<std::string> out;
  if (nfc_utf8.empty()) return out;
  icu::UnicodeString text = FromUtf8(nfc_utf8);
  icu::BreakIterator &iter = CharacterBreaker();
  iter.setText(text);
  int32_t start = iter.first();
  for (int32_t end = iter.next(); end != icu::BreakIterator::DONE;
       start = end, end = iter.next()) {
    out.push_back(ToUtf8(text.tempSubStringBetween(start, end)));
  }
  // Drop the iterator's reference to the local text.
  iter.setText(icu::UnicodeString());
  return out;
}

std::vector<std::string> Graphemes(std::string_view utf8) {
  return GraphemesOfNormalized(Nfc(utf8));
}

std::vector<char32_t> DecodeUtf8(std::string_view utf8) {
  std::vector<char32_t> out;
  out.reserve(utf8.size());
  const auto *s = reinterpret_cast<const uint8_t *>(utf8.data());
  int32_t length = static_cast<int32_t>(utf8.size());
  int32_t i = 0;
  while (i < length) {
    UChar32 c;
    U8_NEXT(s, i, length, c);
    out.push_back(c < 0 ? U'�' : static_cast<char32_t>(c));
  }
  return out;
}

std::string EncodeUtf8(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::vector<std::string> CodePoints(std::string_view utf8) {
  std::vector<std::string> out;
  for (char32_t cp : DecodeUtf8(utf8)) out.push_back(EncodeUtf8(cp));
  return out;
}

bool IsDigitGrapheme(std::string_view grapheme) {
  if (grapheme.size() == 1) return grapheme[0] >= '0' && grapheme[0] <= '9';
  std::vector<char32_t> cps = DecodeUtf8(grapheme);
  return cps.size() == 1 && cps[0] >= 0x0660 && cps[0] <= 0x0669;
}

bool IsNeutralGrapheme(std::string_view grapheme) {
  std::vector<char32_t> cps = DecodeUtf8(grapheme);
  if (cps.size() != 1) return false;
  UChar32 c = static_cast<UChar32>(cps[0]);
  return u_isUWhiteSpace(c) || u_ispunct(c) || u_isdigit(c) ||
         (U_GET_GC_MASK(c) & U_GC_S_MASK) != 0;
}

std::vector<std::string> SplitWhitespace(std::string_view utf8) {
  std::vector<std::string> tokens;
  std::string current;
  for (char32_t cp : DecodeUtf8(Nfc(utf8))) {
    if (u_isUWhiteSpace(static_cast<UChar32>(cp))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current += EncodeUtf8(cp);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::vector<std::string> SplitLines(std::string_view text) {
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::size_t end = nl == std::string_view::npos ? text.size() : nl;
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.emplace_back(line);
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return lines;
}

}  // namespace otkit
