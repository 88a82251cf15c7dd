#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidlift {

/// Runs the command-line front end.  args excludes the program name.
/// Returns 0 on success, 1 on domain errors (JSON on err), 2 on usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace braidlift
