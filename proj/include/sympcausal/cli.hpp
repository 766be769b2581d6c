#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sympcausal::cli {

enum ExitCode : int { kSuccess = 0, kDomainError = 1, kMalformedInput = 2 };

// Runs one invocation. args excludes the program name. Documents named by
// path are read from disk; "-" or no path reads `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace sympcausal::cli
