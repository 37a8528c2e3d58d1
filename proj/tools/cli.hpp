#pragma once

#include <string>
#include <vector>

namespace setpoly::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kRejected = 3 };

/// Runs one command line. `args` excludes the program name; `root` picks
/// the command set ("sp", "engine", "ramsey" or "polymap").
int run(const std::string& root, const std::vector<std::string>& args);

int main_entry(const std::string& root, int argc, char** argv);

}  // namespace setpoly::cli
