#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace wandering {

struct FlagDef {
  std::string name;  // without the leading dashes
  std::string default_value;
  std::string help;
};

struct SubcommandDef {
  std::string name;
  std::string help;
  std::vector<FlagDef> flags;
};

/// The command table; every flag has a default.
const std::vector<SubcommandDef>& subcommands();

struct RunConfig {
  std::string subcommand;
  /// Every flag of the subcommand, defaults filled in.
  std::map<std::string, std::string> parameters;
  std::string output_path;

  /// A command line that reproduces this configuration.
  std::string command_line() const;
};

/// `args` excludes the program name. Throws Error(Usage) on malformed input,
/// unknown flags or an empty argument list. `--help` is reported through
/// HelpRequested.
RunConfig parse_args(const std::vector<std::string>& args);

struct HelpRequested {
  std::string text;
};

/// Runs the configured operation, printing report lines to `out`. Returns 0
/// iff every check of the run passes. Library errors propagate.
int execute(const RunConfig& config, std::ostream& out);

/// Full front door: parse, echo the resolved config, execute. Failures are
/// reported as one `FAIL ...` line on `err`. Returns the exit status
/// (0 pass, 1 check or runtime failure, 2 usage error).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a..b" (inclusive), "a,b,c", or a single integer.
std::vector<int> parse_index_list(const std::string& text);

}  // namespace wandering
