#ifndef OTKIT_SRC_EMBEDDED_DATA_H_
#define OTKIT_SRC_EMBEDDED_DATA_H_

#include <string_view>

namespace otkit::embedded {

extern const std::string_view kSchemeJson;
extern const std::string_view kExceptionsTsv;
extern const std::string_view kAffixesTsv;

}  // namespace otkit::embedded

#endif  // OTKIT_SRC_EMBEDDED_DATA_H_
