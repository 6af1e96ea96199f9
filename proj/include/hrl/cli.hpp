#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hrl::cli {

/// `args` excludes the program name. Returns 0 when everything checked
/// passed, 1 when something failed, 2 for usage and I/O errors.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

} // namespace hrl::cli
