#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace reldom {

// Parse and run one CLI invocation. Returns the process exit status:
//   0 success, 1 failed certificate or reproduction mismatch,
//   2 input error, 3 undetermined at the configured cap.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reldom
