#pragma once

// Experiment configuration shared by the CLI subcommands.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace CLI {
class App;
}

namespace cfevt {

inline constexpr int kConfigSchemaVersion = 1;

struct ExperimentConfig {
  std::string command;
  std::string family = "nicf";
  std::string input = "pi";
  std::size_t digits = 24;
  std::size_t n = 4096;
  std::vector<std::size_t> n_grid;
  std::size_t samples = 10000;
  std::vector<double> r_grid{1.0};
  std::size_t k = 1;
  std::size_t j_max = 4;
  std::size_t burn_in = 50;
  std::vector<double> j_grid{8, 12, 16};
  std::vector<double> tail_j;
  std::size_t resolution = 64;
  std::optional<std::size_t> precision;  // initial bits; unset means 64 + 8n
  std::size_t sample_bits = 256;         // start precision of stationary samples
  std::uint64_t seed = 1;
  std::size_t workers = 0;
  std::string output_dir = "runs";
  std::string constants;  // path to a constants.json for HCCF runs
  std::optional<double> C;  // explicit HCCF scaling constant, overrides `constants`
  double theta = 0.75;
  std::size_t points = 100;
  std::size_t iters = 100;
};

nlohmann::json to_json(const ExperimentConfig& c);
/// Missing keys keep their defaults; unknown keys are rejected.
ExperimentConfig config_from_json(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

/// Checks the fields the command uses. Throws InvalidArgument.
void validate(const ExperimentConfig& c);

/// Binds kebab-case flags to the fields of `c`. Values already in `c` act as
/// defaults; the seed default can come from the CFEVT_SEED variable.
void bind_flags(CLI::App& app, ExperimentConfig& c);

inline constexpr const char* kSeedEnv = "CFEVT_SEED";

}  // namespace cfevt
