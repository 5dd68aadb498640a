#ifndef OTKIT_TOOLS_CLI_H_
#define OTKIT_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace otkit::cli {

enum ExitCode { kOk = 0, kUsage = 1, kDataError = 2 };

// Runs one otkit invocation. `args` excludes the program name. Data goes to
// `out`, diagnostics to `err`. Reads OTKIT_SCHEME_DIR from the environment.
int Run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err);

}  // namespace otkit::cli

#endif  // OTKIT_TOOLS_CLI_H_
