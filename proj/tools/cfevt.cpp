// cfevt: continued-fraction digit engines and extreme-value experiments.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cfevt/errors.hpp"
#include "cfevt/runner/commands.hpp"
#include "cfevt/runner/config.hpp"

namespace {

// Exit codes: 0 ok, 2 invalid arguments/config, 3 run-time failure.
int fail(const std::exception& e, int code) {
  std::cout << cfevt::error_json(e).dump() << std::endl;
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  cfevt::ExperimentConfig cfg;
  // A --config file supplies defaults that explicit flags then override.
  for (int i = 1; i + 1 < argc; ++i) {
    if (std::string(argv[i]) == "--config") {
      try {
        cfg = cfevt::load_config(argv[i + 1]);
      } catch (const std::exception& e) {
        return fail(e, 2);
      }
    }
  }

  CLI::App app{"Continued-fraction digit engines and extreme-value experiments"};
  app.set_version_flag("--version", std::string(CFEVT_VERSION));
  app.require_subcommand(1);
  std::string config_path;
  const char* commands[][2] = {
      {"expand", "certified digits of a literal or named constant"},
      {"tail", "exact or empirical first-digit tails"},
      {"density", "Hurwitz invariant density histogram, symmetry defect, region counts"},
      {"constants", "estimate the cusp constants of the Hurwitz density"},
      {"evl", "empirical law of the k-th maximum against its Frechet limit"},
      {"poisson", "exceedance counts against the Poisson limit"},
      {"rate", "deviation from the limit law as n grows"},
      {"demo-naive", "trap region of the naive complex continued fraction"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    cfevt::bind_flags(*sub, cfg);
    sub->add_option("--config", config_path, "JSON config (flags override its values)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(cfevt::InvalidArgument(e.what()), 2);
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const auto res = cfevt::run_command(cfg);
    auto out = res.summary;
    out["run_dir"] = res.dir.string();
    std::cout << out.dump(2) << std::endl;
    return 0;
  } catch (const cfevt::InvalidArgument& e) {
    return fail(e, 2);
  } catch (const std::exception& e) {
    return fail(e, 3);
  }
}
