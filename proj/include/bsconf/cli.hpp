#pragma once

// Command-line front end: argv -> Command -> serialized report.

#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace bsconf::cli {

  struct Command {
    std::string                        name;
    std::map<std::string, std::string> params;  // flag name without dashes -> value
    std::string                        format = "json";
    bool                               meta   = false;

    bool operator==(Command const&) const = default;
  };

  // Throws UsageError naming the offending flag or subcommand. Values from
  // --config (key=value lines) fill keys not given on the command line.
  Command parse(std::vector<std::string> const& argv);

  std::string usage();

  // Returns 0 on success, 1 on domain errors, 2 on usage errors. Payload goes
  // to out, diagnostics (and --meta) to err.
  int execute(Command const& c, std::ostream& out, std::ostream& err);

  // parse + execute with exit-code mapping.
  int run(std::vector<std::string> const& argv, std::ostream& out, std::ostream& err);

}  // namespace bsconf::cli
