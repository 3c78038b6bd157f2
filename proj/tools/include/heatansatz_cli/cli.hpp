#ifndef HEATANSATZ_CLI_HPP
#define HEATANSATZ_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace heatansatz::cli
{

/// Exit codes: 0 success, 1 domain error, 2 usage error.
enum ExitCode : int { ok = 0, domain_error = 1, usage_error = 2 };

/// Runs one subcommand; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace heatansatz::cli

#endif
