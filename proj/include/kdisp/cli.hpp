#ifndef KDISP_CLI_HPP
#define KDISP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace kdisp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitBadParameters = 3;

/// Runs one subcommand (`args` excludes the program name). Results go to
/// `out` unless an output file was requested; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kdisp::cli

#endif
