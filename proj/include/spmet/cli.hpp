#ifndef SPMET_CLI_HPP
#define SPMET_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace spmet {

// Dispatches the subcommands; exit code 0 on success / all-pass, 1 when a
// verification check fails, 2 on usage or parse errors.
int cli_run(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace spmet

#endif
