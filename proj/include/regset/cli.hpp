#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace regset {

// args excludes the program name. Exit codes: 0 decided true or verified,
// 1 decided false, 2 error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cli_main(int argc, const char* const* argv);

}  // namespace regset
