#ifndef OTKIT_ERROR_H_
#define OTKIT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace otkit {

enum class ErrorCode {
  kUnknownLetter,
  kUnknownScheme,
  kNoVowelInStem,
  kEmptyCorpus,
  kEmptyReference,
  kLineCountMismatch,
  kMalformedXml,
  kUnsupportedSchema,
  kEmptyManifest,
  kMalformedData,
  kInvalidArgument,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library is an otkit::Error. The CLI maps them
// all to the "data error" exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class LineCountMismatch : public Error {
 public:
  LineCountMismatch(std::size_t expected, std::size_t actual,
                    const std::string &context = "")
      : Error(ErrorCode::kLineCountMismatch,
              (context.empty() ? std::string() : context + ": ") +
                  "expected " + std::to_string(expected) + " lines, got " +
                  std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

inline std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownLetter: return "UnknownLetter";
    case ErrorCode::kUnknownScheme: return "UnknownScheme";
    case ErrorCode::kNoVowelInStem: return "NoVowelInStem";
    case ErrorCode::kEmptyCorpus: return "EmptyCorpus";
    case ErrorCode::kEmptyReference: return "EmptyReference";
    case ErrorCode::kLineCountMismatch: return "LineCountMismatch";
    case ErrorCode::kMalformedXml: return "MalformedXml";
    case ErrorCode::kUnsupportedSchema: return "UnsupportedSchema";
    case ErrorCode::kEmptyManifest: return "EmptyManifest";
    case ErrorCode::kMalformedData: return "MalformedData";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIo: return "IoError";
  }
  return "Unknown";
}

}  // namespace otkit

#endif  // OTKIT_ERROR_H_
