#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flapped::cli {

// Runs one command. Returns 0 on success, 2 on input errors, 1 on internal failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace flapped::cli
