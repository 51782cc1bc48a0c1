#include <chrono>
#include <cstdio>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cli/commands.hpp"
#include "sivalley/errors.hpp"

namespace {

enum Exit { ok = 0, other = 1, usage = 2, numerical = 3, io = 4 };

}  // namespace

int main(int argc, char** argv) {
  using namespace sivalley;
  CLI::App app{"Valley-qubit simulator for a rectangular silicon quantum dot", "sivalley"};
  app.set_version_flag("--version", cli::kVersion);
  std::string command, config_path, out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::optional<int> threads;
  bool timing = false;
  app.add_option("command", command, "spectrum|coupling|anticross|rabi|swap|phonon|crosstalk")
      ->required()
      ->check(CLI::IsMember(cli::command_names()));
  app.add_option("--config", config_path, "config file (key = value [unit])")->required();
  app.add_option("--out", out_dir, "output directory");
  app.add_option("--seed", seed, "random seed");
  app.add_option("--threads", threads, "worker threads");
  app.add_flag("--timing", timing, "record wall time in the manifests");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : usage;
  }

  try {
    cli::RunConfig config = cli::load_config(config_path);
    cli::apply_overrides(config, seed, threads);
    const auto start = std::chrono::steady_clock::now();
    const cli::CommandOutput output = cli::run_command(command, config);
    cli::WriteOptions options;
    options.out_dir = out_dir;
    options.timing = timing;
    options.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    for (const std::string& path : cli::write_outputs(command, config, output, options)) {
      std::cout << path << "\n";
    }
    for (const std::string& w : output.warnings) std::cerr << "warning: " << w << "\n";
    return ok;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return usage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << "\n";
    return usage;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return numerical;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return io;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return other;
  }
}
