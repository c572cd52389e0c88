#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace loves {

// Runs one CLI invocation (arguments without the program name) and writes
// the JSON or CSV report to out. Returns the process exit status.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace loves
