#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lot {

// Runs one lotcert command (args exclude the program name) writing to the
// given streams.  Returns 0 on success/pass, 1 on a failed test or failed
// certification, 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace lot
