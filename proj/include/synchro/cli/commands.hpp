#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace synchro::cli {

/// Runs one command line (arguments after the program name). Reports go to
/// `out`, diagnostics to `err`. Returns 0 (success / true), 1 (property false
/// or verification mismatch) or 2 (invalid input, unmet precondition, state
/// cap); nothing else.
///
/// The subset-search cap comes from --state-cap, else SYNCHRO_STATE_CAP, else
/// the library default.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace synchro::cli
