#pragma once
// cli.hpp - the command-line front end, callable in-process for tests.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace vtree::cli {

// Runs one invocation; returns the process exit code.
// 0 = success, 1 = domain error or verification failure, 2 = usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// subcommand -> library operations it exercises (for the coverage test)
const std::map<std::string, std::vector<std::string>>& dispatch_table();

} // namespace vtree::cli
