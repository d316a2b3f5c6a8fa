#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace enclose::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kConditionFailure = 1;
constexpr int kInputError = 2;
constexpr int kOutOfRegime = 3;
constexpr int kBudget = 4;

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; files are written only where a command asks for them.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace enclose::cli
