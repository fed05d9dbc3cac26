#pragma once

#include <iosfwd>

namespace tropmc::cli {

// Entry point of the command line tool; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropmc::cli
