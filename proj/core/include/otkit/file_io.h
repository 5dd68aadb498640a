#ifndef OTKIT_FILE_IO_H_
#define OTKIT_FILE_IO_H_

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "otkit/error.h"

namespace otkit {

inline std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "read failed: " + path.string());
  return buf.str();
}

inline void WriteFile(const std::filesystem::path &path,
                      const std::string &contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot create " + path.string());
  out << contents;
  out.flush();
  if (!out) throw Error(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace otkit

#endif  // OTKIT_FILE_IO_H_
