#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace aaj::cli {

enum Exit : int {
  kOk = 0,
  kInputError = 1,
  kCheckFailed = 2,
  kCapExceeded = 3,
  // aa command classification
  kAlternating = 10,
  kAlmostAlternatingNotStronglyReduced = 11,
  kNotAlmostAlternating = 12,
};

/// Runs one command line (args exclude the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aaj::cli
