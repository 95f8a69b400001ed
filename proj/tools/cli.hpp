#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qconcept::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kOk = 0,
  kAcceptanceMismatch = 1,
  kArgumentError = 2,
  kIoError = 3,
};

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// (or the --output file), diagnostics to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qconcept::cli
