#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace animst::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kDataValidation = 3,
  kComputation = 4,
};

/// Settings shared by the pipeline subcommands. A key=value config file
/// may supply any of them; explicit flags take precedence.
struct PipelineConfig {
  std::size_t n_categories = 11;
  double eigen_tol = 1e-10;
  std::size_t eigen_max_iter = 100000;
  std::uint64_t seed = 0;
  bool pair_cache = true;
  unsigned workers = 0;  // 0 means all available cores
};

/// Reads `key=value` lines (blank lines and `#` comments ignored) into
/// `config`, skipping keys listed in `locked`. Unknown keys are usage
/// errors.
void apply_config_file(const std::filesystem::path& path, PipelineConfig& config,
                       const std::vector<std::string>& locked = {});

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace animst::cli
