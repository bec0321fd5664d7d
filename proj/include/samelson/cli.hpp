#pragma once

#include <iosfwd>

namespace samelson {

// Dispatches one CLI invocation (subcommands: order, matrix, table,
// verify-paper, commutative, gauge) writing to the supplied streams.
// Exit codes: 0 success, 2 invalid input, 3 internal assertion/infinite
// order (a bug), 4 table disagreement. No other codes are returned.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace samelson
