#pragma once

#include <string>
#include <vector>

namespace hslab::cli {

/// Exit codes: 0 success, 1 bad input or failed verification, 2 inconclusive theorem check.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInconclusive = 2;

/// args[0] is the program name.
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

/// Parses "pi", "pi/2", "2pi" style tokens or a plain number.
double parse_length(const std::string& text);

/// Reads "key = value" lines ('#' starts a comment) into "--key value" tokens.
std::vector<std::string> config_tokens(const std::string& path);

}  // namespace hslab::cli
