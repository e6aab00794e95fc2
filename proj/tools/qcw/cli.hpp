#pragma once

#include <json.hpp>
#include <string>
#include <vector>

namespace qcw::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kInputError = 2, kPreconditionError = 3 };

struct Outcome {
  int exit_code = kOk;
  std::string out;  // result stream; empty unless exit_code == 0
  std::string err;  // diagnostics
};

/// Runs one invocation. args excludes the program name.
Outcome run(const std::vector<std::string>& args);

/// Text rendering of a json envelope {"subcommand", "result", "warnings"};
/// text mode prints exactly this.
std::string render_text(const nlohmann::json& envelope);

}  // namespace qcw::cli
