#pragma once

#include <ostream>

namespace bigm1::cli {

// Entry point of the command-line tool, separated from main() so tests can
// drive it directly. Returns the process exit code:
//   0 all checks passed, 1 usage error, 2 domain/degenerate-parameter error,
//   3 quadrature did not converge, 4 run completed but a check failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bigm1::cli
