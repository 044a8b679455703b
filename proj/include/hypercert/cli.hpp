#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypercert::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2 };

/// Runs one command line (argv without the program name). Results go to out,
/// the single-line error record to err.
int dispatch(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace hypercert::cli
