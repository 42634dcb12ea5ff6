#pragma once

#include <iosfwd>

namespace critnum::cli {

/// Runs the command line; returns the process exit code
/// (0 all rows agree, 1 mismatch, 2 error).
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace critnum::cli
