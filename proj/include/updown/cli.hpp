#pragma once

#include <ostream>
#include <span>
#include <string>

namespace updown::cli {

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 for a "false" verdict or a
/// failed selftest, 2 for usage or input errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace updown::cli
