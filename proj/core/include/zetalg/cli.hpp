#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zetalg::cli {

// Runs the zetalg command line against explicit streams.  Returns the
// process exit code: 0 ok, 1 domain/input error, 2 verification mismatch.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace zetalg::cli
