#pragma once

#include <iosfwd>

namespace norlund::cli {

/// Entry point of the `norlund` tool. Results go to `out`; every error is a
/// single line on `err`. Exit codes: 0 success, 1 identity check failed,
/// 2 invalid input or violated precondition.
int run(int argc, const char* const argv[], std::ostream& out, std::ostream& err);

}  // namespace norlund::cli
