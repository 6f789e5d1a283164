#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ted::cli {

// Runs the command-line interface against explicit streams; returns the
// process exit code (0 ok, 2 usage/parse error, 3 oracle size guard).
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace ted::cli
