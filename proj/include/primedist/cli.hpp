#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace primedist::cli {

/// Exit statuses.
enum Exit : int {
    ok = 0,        ///< success, found, verified
    negative = 1,  ///< verification failed or search exhausted
    usage = 2,     ///< bad arguments or malformed input
    budget = 3,    ///< a budget ran out before an answer
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace primedist::cli
