#ifndef SIVALLEY_CLI_COMMANDS_HPP
#define SIVALLEY_CLI_COMMANDS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cli/config.hpp"
#include "cli/format.hpp"
#include "json.hpp"

namespace sivalley::cli {

using Json = nlohmann::ordered_json;

struct CommandOutput {
  std::vector<std::pair<std::string, CsvTable>> tables;  // file name -> table
  Json results = Json::object();
  std::vector<std::string> warnings;
  double residual_max = 0.0;
};

const std::vector<std::string>& command_names();

/// Runs one subcommand. Throws ConfigError for unusable settings (for
/// example an empty field grid) and lets library errors propagate.
CommandOutput run_command(const std::string& name, const RunConfig& config);

struct WriteOptions {
  std::string out_dir = ".";
  bool timing = false;
  double runtime_s = 0.0;
};

/// Writes every table plus a `<stem>.manifest.json` sibling and the
/// resolved-config echo `<command>.config.txt`. Returns the written paths.
/// Throws IoError.
std::vector<std::string> write_outputs(const std::string& command, const RunConfig& config,
                                       const CommandOutput& output, const WriteOptions& options);

/// Manifest for one output file (exposed for tests).
Json build_manifest(const std::string& command, const RunConfig& config, const CommandOutput& output,
                    const std::string& file, const WriteOptions& options);

inline constexpr const char* kVersion = "1.0.0";

}  // namespace sivalley::cli

#endif  // SIVALLEY_CLI_COMMANDS_HPP
