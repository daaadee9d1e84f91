#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gsslab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCounterexample = 1,
  kUsageError = 2,
};

inline constexpr int kGenerationCap = 24;
inline constexpr int kExhaustiveCap = 16;
inline constexpr const char* kMaxLEnv = "GSSLAB_MAX_L";

/// Full command line (args[0] is the program name). Normal output goes to
/// `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsslab::cli
