#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sdfvs {

// exit codes used by the command line driver
inline constexpr int kExitYes = 0;
inline constexpr int kExitNo = 2;
inline constexpr int kExitParse = 64;
inline constexpr int kExitInternal = 70;

// Runs the sdfvs command line (args without the program name). Used by the
// sdfvs binary and invoked in-process by the tests.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace sdfvs
