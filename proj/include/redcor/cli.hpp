#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace redcor::cli {

/// Exit codes of `run`.
enum Exit : int { Ok = 0, VerdictFailed = 1, Usage = 2, Engine = 3 };

/// Runs one redcor command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace redcor::cli
