#ifndef METAPLECTIC_CLI_HPP
#define METAPLECTIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace metaplectic::cli
{

/// Exit codes of the command line tool.
enum ExitCode : int {
    ok = 0,
    failure = 1, // verify-lemma found a counterexample
    parse_error = 2,
    semantic_error = 3,
    reducible = 10,
};

/// Environment variable holding the default `--format`.
inline constexpr const char *format_env_var = "METAPLECTIC_FORMAT";

/// Runs one invocation; `args` excludes the program name. Results go to
/// `out` only when the exit code is below 2, diagnostics to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace metaplectic::cli

#endif
