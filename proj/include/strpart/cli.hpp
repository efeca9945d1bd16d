#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace strpart {

// Exit codes shared by every subcommand, fixed for scriptability.
struct ExitCode {
  static constexpr int Sat = 0;  // also: generic success
  static constexpr int Unsat = 1;
  static constexpr int Budget = 2;
  static constexpr int AuditDisagreement = 3;
  static constexpr int ParseFailure = 64;
  static constexpr int SemanticFailure = 65;
};

// Runs one CLI invocation; args excludes the program name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace strpart
