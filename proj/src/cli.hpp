#ifndef ADM_CLI_HPP
#define ADM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace adm {

/// Dispatches the zpoly / apoly / count / pendulum subcommands. `args` is
/// the argument list without the program name. Output is byte-deterministic
/// for fixed arguments. Returns 0 on success, nonzero after printing a
/// diagnostic to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace adm

#endif  // ADM_CLI_HPP
