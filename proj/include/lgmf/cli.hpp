#ifndef LGMF_CLI_HPP
#define LGMF_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lgmf {

/// Runs one command. Exit codes: 0 success, 1 domain or I/O error (one JSON
/// error line on `err`), 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lgmf

#endif  // LGMF_CLI_HPP
