#pragma once

#include <iosfwd>

namespace orbitope::cli {

/// Runs one subcommand. Returns 0 on success, 1 on a domain error (a JSON
/// object is written to `err`), 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orbitope::cli
