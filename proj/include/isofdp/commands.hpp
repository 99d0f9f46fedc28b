#pragma once

#include <iosfwd>

namespace isofdp {

/// Entry point of the `isofdp` tool. Exit codes: 0 success, 1 unreadable or
/// malformed input, 2 invalid or infeasible configuration, 3 numerical failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace isofdp
