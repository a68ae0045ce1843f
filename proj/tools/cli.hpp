#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace typecount::cli {

// exit codes: 0 success, 1 verification failure, 2 usage error, 3 budget refusal
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace typecount::cli
