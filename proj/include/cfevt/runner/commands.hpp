#pragma once

// The CLI subcommands: expand, tail, density, constants, evl, poisson, rate,
// demo-naive. Each writes its tables under a fresh run directory.

#include <exception>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "cfevt/runner/config.hpp"

namespace cfevt {

struct CommandResult {
  nlohmann::json summary;
  std::filesystem::path dir;
};

/// Validates and runs cfg.command.
CommandResult run_command(const ExperimentConfig& cfg);

/// {"error": kind, "message": ...}
nlohmann::json error_json(const std::exception& e);

/// %.17g
std::string fmt17(double x);

}  // namespace cfevt
