#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace toric::cli {

/// Process exit codes.
enum Exit : int {
  kOk = 0,
  kPropertyFalse = 1,
  kBadInput = 2,
  kNotAlmostSimple = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

} // namespace toric::cli
