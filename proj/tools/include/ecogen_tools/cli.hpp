#pragma once

#include <iosfwd>

namespace ecogen::tools {

/// Name of the environment variable holding the default oracle depth.
inline constexpr const char* kMaxNEnv = "ECOGEN_MAX_N";

/// Runs the `ecogen` command line. Returns 0 on success, 1 when a check
/// fails (verification mismatch, negative verdict), 2 on a usage error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ecogen::tools
