#pragma once

#include <iosfwd>

namespace nsga2 {

/// Entry point of the command-line tool (subcommands run, benchmark,
/// metrics, front). Returns 0 on success, 1 on usage errors and 2 on
/// runtime errors.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace nsga2
