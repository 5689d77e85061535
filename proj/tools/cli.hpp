#ifndef SKEWRES_TOOLS_CLI_HPP
#define SKEWRES_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace skewres::cli {

// Runs one skewres invocation; emits a single JSON document on `out` and
// returns the process exit code (0 ok, 2 parse error, 3 precondition
// violated, 4 theorem-check failure).
int run(const std::vector<std::string>& args, std::ostream& out);

}  // namespace skewres::cli

#endif
