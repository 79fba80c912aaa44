#pragma once

#include <string>
#include <vector>

namespace halgeo {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name). Exit codes: 0 on
/// success, including boolean queries; 1 when a verdict command answers in
/// the negative or the axiom check fails; 2 on any error.
/// The point cap in force before the call is restored afterwards.
CliResult execute(const std::vector<std::string>& args);

}  // namespace halgeo
