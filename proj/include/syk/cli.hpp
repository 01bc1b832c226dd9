#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace syk {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerifyFailed = 1,
  kExitUsage = 2,  // bad flags, malformed input, shape preconditions
  kExitInternal = 3,
};

/// Runs one command (args exclude the program name). JSON goes to out,
/// diagnostics and timing to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// A CLI invocation whose stdout is kept as a golden file <name>.json.
struct Fixture {
  std::string name;
  std::vector<std::string> args;
};

const std::vector<Fixture>& fixture_corpus();

}  // namespace syk
