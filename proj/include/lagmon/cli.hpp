#pragma once

// Command-line front end. Exit status 0 on success, 2 when the input fails
// validation, 3 when it cannot be parsed.

#include <ostream>
#include <string>
#include <vector>

namespace lagmon {

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lagmon
