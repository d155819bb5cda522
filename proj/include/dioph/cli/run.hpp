#pragma once

#include <string>
#include <vector>

namespace dioph {
namespace cli {

// Entry point shared by the binary and the tests.  Returns the process exit
// code: 0 success, 2 invalid parameters, 3 precision exhausted, 1 anything
// else.  Reports go to `out`, machine-readable errors to `err`.
int run(const std::vector<std::string>& args, std::string& out, std::string& err);

}  // namespace cli
}  // namespace dioph
