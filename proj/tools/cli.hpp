#pragma once

#include <ostream>

namespace extrema::cli {

/// Runs the extrema command line. Returns 0 on success, 2 on invalid
/// arguments or input files, 1 on runtime failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace extrema::cli
