#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace halfshift::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kIoError = 3;

// Environment variable naming the default output directory. When set and
// --out is absent, reports go to $HALFSHIFT_OUTPUT_DIR/<command>.<format>.
inline constexpr const char* kOutputDirEnv = "HALFSHIFT_OUTPUT_DIR";

// Runs the command line; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace halfshift::cli
