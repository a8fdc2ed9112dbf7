#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace iwasawa::cli {

enum ExitCode : int {
    kSuccess = 0,
    kInvalidInput = 2,
    kMismatch = 3,
    kNotStabilized = 4,
};

struct Outcome {
    int exit_code = kSuccess;
    std::string out;  // the document (JSON or CSV), written once by the caller
    std::string err;  // diagnostics
};

/// Runs one invocation. `args` excludes the program name.
Outcome run(const std::vector<std::string>& args);

/// Command line that reproduces a JSON document: the subcommand followed by
/// one flag per echoed input.
std::vector<std::string> reinvocation_args(const nlohmann::json& document);

}  // namespace iwasawa::cli
