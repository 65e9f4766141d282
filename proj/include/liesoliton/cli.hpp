#pragma once

#include <iosfwd>

namespace liesoliton {

/// Command-line driver (argv as handed to main). Writes reports to `out` and
/// diagnostics to `err`; returns the process exit code: 0 for a clean run,
/// 1 when a verification failed (family FAIL, table MISMATCH, uncovered scan
/// solutions), 2 for usage errors and unreadable input.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace liesoliton
