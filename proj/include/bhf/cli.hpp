#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bhf {

// Entry point of bhfcli. args excludes the program name. Returns the process exit code:
// 0 success, 1 usage error, 2 runtime error, 3 stability check failed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhf
