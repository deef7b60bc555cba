#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace iterata::cli {

// args excludes the program name. Returns the process exit status:
// 0 success, 1 domain error (JSON object on err), 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace iterata::cli
