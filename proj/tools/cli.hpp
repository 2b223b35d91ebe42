#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

// Parses and dispatches one invocation.  Exit codes: 0 success, 1 domain or
// usage error (message on the error stream), 2 verification-suite failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace schubert::cli
