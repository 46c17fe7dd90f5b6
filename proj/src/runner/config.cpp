#include "cfevt/runner/config.hpp"

#include <fstream>
#include <set>

#include <CLI11.hpp>

#include "cfevt/cf/expansion.hpp"
#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

const std::set<std::string> kCommands = {"expand", "tail",    "density", "constants",
                                         "evl",    "poisson", "rate",    "demo-naive"};

template <typename T>
void read(const nlohmann::json& j, const char* key, T& out) {
  if (j.contains(key)) out = j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const ExperimentConfig& c) {
  nlohmann::json j = {
      {"schema_version", kConfigSchemaVersion},
      {"command", c.command},
      {"family", c.family},
      {"input", c.input},
      {"digits", c.digits},
      {"n", c.n},
      {"n_grid", c.n_grid},
      {"samples", c.samples},
      {"r_grid", c.r_grid},
      {"k", c.k},
      {"j_max", c.j_max},
      {"burn_in", c.burn_in},
      {"j_grid", c.j_grid},
      {"tail_j", c.tail_j},
      {"resolution", c.resolution},
      {"sample_bits", c.sample_bits},
      {"seed", c.seed},
      {"workers", c.workers},
      {"output_dir", c.output_dir},
      {"constants", c.constants},
      {"theta", c.theta},
      {"points", c.points},
      {"iters", c.iters},
  };
  j["precision"] = c.precision ? nlohmann::json(*c.precision) : nlohmann::json(nullptr);
  j["C"] = c.C ? nlohmann::json(*c.C) : nlohmann::json(nullptr);
  return j;
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> known = {
      "schema_version", "command", "family", "input", "digits", "n", "n_grid", "samples",
      "r_grid", "k", "j_max", "burn_in", "j_grid", "tail_j", "resolution", "precision",
      "sample_bits", "seed", "workers", "output_dir", "constants", "C", "theta", "points", "iters"};
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    if (!known.count(key)) throw InvalidArgument("unknown config key '" + key + "'");
  }
  ExperimentConfig c;
  try {
    read(j, "command", c.command);
    read(j, "family", c.family);
    read(j, "input", c.input);
    read(j, "digits", c.digits);
    read(j, "n", c.n);
    read(j, "n_grid", c.n_grid);
    read(j, "samples", c.samples);
    read(j, "r_grid", c.r_grid);
    read(j, "k", c.k);
    read(j, "j_max", c.j_max);
    read(j, "burn_in", c.burn_in);
    read(j, "j_grid", c.j_grid);
    read(j, "tail_j", c.tail_j);
    read(j, "resolution", c.resolution);
    read(j, "sample_bits", c.sample_bits);
    read(j, "seed", c.seed);
    read(j, "workers", c.workers);
    read(j, "output_dir", c.output_dir);
    read(j, "constants", c.constants);
    read(j, "theta", c.theta);
    read(j, "points", c.points);
    read(j, "iters", c.iters);
    if (j.contains("precision") && !j["precision"].is_null()) c.precision = j["precision"].get<std::size_t>();
    if (j.contains("C") && !j["C"].is_null()) c.C = j["C"].get<double>();
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument(std::string("bad config value: ") + ex.what());
  }
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read config file " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& ex) {
    throw InvalidArgument("config file " + path + " is not valid JSON: " + ex.what());
  }
  return config_from_json(j);
}

void validate(const ExperimentConfig& c) {
  if (!kCommands.count(c.command)) throw InvalidArgument("unknown command '" + c.command + "'");
  const Family f = parse_family(c.family);
  auto need = [](bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
  };
  const std::string& cmd = c.command;
  if (cmd == "expand") need(c.digits >= 1, "--digits must be >= 1");
  if (cmd == "evl" || cmd == "poisson" || cmd == "rate") {
    need(c.n >= 1, "--n must be >= 1");
    need(c.samples >= 1000, "--samples must be >= 1000");
    for (double r : c.r_grid) need(r > 0, "r values must be positive");
    need(!c.r_grid.empty(), "--r needs at least one value");
  }
  if (cmd == "evl") need(c.k >= 1 && c.k <= 16 && c.k <= c.n, "--k must be in 1..min(16, n)");
  if (cmd == "poisson") need(c.j_max >= 3 && c.j_max < 16, "--j-max must be in 3..15");
  if (cmd == "rate") {
    need(f != Family::hccf || c.C || !c.constants.empty(), "hccf rate needs --constants or --c");
    need(c.theta > 0 && c.theta < 1, "--theta must be in (0, 1)");
  }
  if (cmd == "density" || cmd == "constants" || (cmd == "tail" && f == Family::hccf)) {
    need(c.samples >= 1, "--samples must be >= 1");
    need(c.sample_bits >= 53, "--sample-bits must be >= 53");
  }
  if (cmd == "density") need(c.resolution >= 2 && c.resolution % 2 == 0, "--resolution must be even");
  if (cmd == "constants") need(c.j_grid.size() >= 3, "--j-grid needs at least 3 values");
  if (cmd == "demo-naive") need(c.points >= 1, "--points must be >= 1");
  if (c.C) need(*c.C > 0, "--c must be positive");
}

void bind_flags(CLI::App& app, ExperimentConfig& c) {
  app.add_option("--family", c.family, "rcf, nicf or hccf")->capture_default_str();
  app.add_option("--input", c.input, "literal, a+bi, re,im, or pi/sqrt2/golden/e")->capture_default_str();
  app.add_option("--digits", c.digits, "digits to expand")->capture_default_str();
  app.add_option("--n", c.n, "expansion length")->capture_default_str();
  app.add_option("--n-grid", c.n_grid, "lengths for rate/scaling tables")->delimiter(',');
  app.add_option("--samples", c.samples)->capture_default_str();
  app.add_option("--r,--r-grid", c.r_grid, "threshold scale(s)")->delimiter(',');
  app.add_option("--k", c.k, "order statistic")->capture_default_str();
  app.add_option("--j-max", c.j_max)->capture_default_str();
  app.add_option("--burn-in", c.burn_in)->capture_default_str();
  app.add_option("--j-grid", c.j_grid)->delimiter(',');
  app.add_option("--tail-j", c.tail_j, "tail thresholds")->delimiter(',');
  app.add_option("--resolution", c.resolution)->capture_default_str();
  app.add_option("--precision", c.precision, "initial bits (default 64 + 8n)");
  app.add_option("--sample-bits", c.sample_bits)->capture_default_str();
  app.add_option("--seed", c.seed)->envname(kSeedEnv)->capture_default_str();
  app.add_option("--workers", c.workers, "0 = all cores")->capture_default_str();
  app.add_option("--output-dir", c.output_dir)->capture_default_str();
  app.add_option("--constants", c.constants, "constants.json from the constants command");
  app.add_option("--c", c.C, "HCCF scaling constant C");
  app.add_option("--theta", c.theta)->capture_default_str();
  app.add_option("--points", c.points)->capture_default_str();
  app.add_option("--iters", c.iters)->capture_default_str();
}

}  // namespace cfevt
