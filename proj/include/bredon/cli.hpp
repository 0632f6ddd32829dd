#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bredon::cli {

/// Runs one command; args excludes the program name. Returns the exit status:
/// 0 success, 1 a validation check failed (the report is still written),
/// 2 malformed input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bredon::cli
