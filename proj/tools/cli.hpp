#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qrsum::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFailure = 1,
  kExitUsage = 2,
};

/// Column order of `verify` rows, CSV header and JSON keys alike.
const std::vector<std::string>& verify_columns();
const std::vector<std::string>& partition_columns();
const std::vector<std::string>& classnum_columns();
const std::vector<std::string>& bench_columns();

/// Runs one command line. `args` excludes the program name. Data goes to
/// `out`, diagnostics and summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qrsum::cli
