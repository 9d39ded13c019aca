#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charcond::cli {

/**
 * Command-line front end, callable in-process for tests: `args` is the
 * command line without the program name.  Returns 0 when every requested
 * check passes, 1 when at least one verification report fails or a probe
 * exceeds its cap, and 2 on usage or expression errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charcond::cli
