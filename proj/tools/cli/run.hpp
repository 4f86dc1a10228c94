#pragma once

#include "config.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace vlab::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitNumerical = 3;

/// Executes a validated configuration, writing files into cfg.outputDir.
/// Returns the process exit status; library exceptions are mapped to 2 / 3.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point; args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Built-in example suite. Prints one PASS/FAIL line per check and returns
/// the number of failures.
int run_selftest(std::ostream& out, unsigned threads);

} // namespace vlab::cli
