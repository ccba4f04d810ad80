#ifndef WPH_CLI_HPP
#define WPH_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace wph::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 1;
inline constexpr int kExitNotQuasiSmooth = 2;
inline constexpr int kExitConsistency = 3;

/// Runs the command line given as argv-style arguments (without the program
/// name). Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wph::cli

#endif
