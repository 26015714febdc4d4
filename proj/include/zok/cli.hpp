#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zok::cli {

// Exit codes of the command-line front end.
enum Exit : int { kOk = 0, kMath = 1, kInput = 2, kInternal = 3 };

// `args` excludes the program name. All output is written once, at the end.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zok::cli
