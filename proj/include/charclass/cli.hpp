#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace charclass::cli {

/// Runs one command line (without the program name). Results go to out,
/// a single diagnostic line goes to err on failure. Returns the exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace charclass::cli
