#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidlab {

/// Runs the braidlab command line. Exit codes: 0 success, 1 predicate-false
/// on check subcommands, 2 malformed input or violated precondition (with a
/// machine-readable {"error", "detail"} object on the output stream).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace braidlab
