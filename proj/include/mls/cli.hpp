#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mls {

// Entry point behind the `mls` binary. args excludes the program name.
// Exit codes: 0 success, 1 a bound or schedule check failed, 2 usage or
// input error.
int cli_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace mls
