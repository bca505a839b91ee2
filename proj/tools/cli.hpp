#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scsp::cli {

/// Dispatches one subcommand. Exit status: 0 on successful execution
/// regardless of verdict, 2 on usage or parse errors, 3 on cap refusals.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scsp::cli
