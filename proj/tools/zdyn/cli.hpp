#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zdyn::cli {

/// Runs one command line (without the program name). Exit codes: 0 success,
/// 1 usage error, 2 domain error reported as "error: <Kind>: <message>".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zdyn::cli
