#ifndef WCO_CLI_HPP
#define WCO_CLI_HPP

#include <string>
#include <vector>

namespace wco {

// Batch front-end; returns the process exit code.
//   analyze --config <file|builtin> --out <dir> [--n0 k] [--max-m m]
//           [--dirs d] [--seed s]
//   verify --suite <identities|examples|all> [--out dir]
//   scenarios --list | --run <id> [--out dir]
// Exit codes: 0 ok (verdicts are data), 1 failed verification/scenario,
// 2 config parse error, 3 resource-cap error.
int run_cli(const std::vector<std::string>& args);

}  // namespace wco

#endif  // WCO_CLI_HPP
