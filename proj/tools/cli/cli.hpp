#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace blockgraph::cli {

inline constexpr int kOk = 0;
inline constexpr int kValidationFailure = 2;
inline constexpr int kParseError = 3;

/// Runs one subcommand. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blockgraph::cli
