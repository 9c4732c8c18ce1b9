#pragma once

#include <iosfwd>

namespace tetrabox::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kUsage = 2,
};

/// Entry point shared by main() and the tests. Streams replace stdin/stdout/stderr.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tetrabox::cli
