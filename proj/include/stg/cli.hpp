#pragma once

#include <iosfwd>

namespace stg::cli {

// Full command-line front end; returns the process exit code.
// 0 ok, 1 usage, 2 parse error, 3 invariant failure, 4 precondition failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace stg::cli
