#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symchar::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kSemantic = 3,
  kIo = 4,
};

/// Runs the command line (args excludes the program name).
///   value  --alpha A --beta B
///   table  --n N [--format pretty|csv|json] [--out PATH]
///   verify --n N [--checks LIST] [--trials T] [--seed S] [--inject-fault S]
///   bench  --n N [--engine recursion|mn|both]
/// Global: --threads K, --cache DIR.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace symchar::cli
