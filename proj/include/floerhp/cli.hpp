#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace floerhp::cli {

// Dispatches one command line (without the program name).  Results go to
// out, diagnostics to err.  Exit codes:
//   0   success
//   2   non-admissible slope or violated precondition (structured reason)
//   3   data-file error
//   4   internal inconsistency (non-integral counts, failed selftest)
//   64  usage error
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace floerhp::cli
