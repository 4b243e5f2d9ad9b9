#ifndef HYPERSPEC_CLI_HPP
#define HYPERSPEC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hyperspec/error.hpp"

namespace hyperspec {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitUnsupported = 2,
  kExitFailure = 3,
};

int exit_code_for(Errc code);

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperspec

#endif
