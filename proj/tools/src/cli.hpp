#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rsdl::cli {

enum ExitCode : int { ok = 0, user_error = 1, io_error = 2, strict_inconsistency = 3 };

/// Runs one `rsdl` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace rsdl::cli
