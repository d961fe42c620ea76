#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wirtlab::cli {

/// Dispatches one command line. Exit code contract: 0 when every audited
/// inequality passes, 2 when any fails, 1 on usage errors, malformed input,
/// or a violated hypothesis gate.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace wirtlab::cli
