#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpp {

/// Exit codes: 0 success or agreement, 1 domain failure or disagreement,
/// 2 usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpp
