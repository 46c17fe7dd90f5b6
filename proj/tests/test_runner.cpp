#include <doctest.h>

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <unistd.h>

#include "cfevt/errors.hpp"
#include "cfevt/runner/commands.hpp"
#include "cfevt/runner/config.hpp"
#include "cfevt/runner/manifest.hpp"

using namespace cfevt;
namespace fs = std::filesystem;

namespace {

fs::path scratch() {
  static const fs::path root = [] {
    auto p = fs::temp_directory_path() / ("cfevt_runner_" + std::to_string(::getpid()));
    fs::remove_all(p);
    fs::create_directories(p);
    return p;
  }();
  return root;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ExperimentConfig base(const std::string& command) {
  ExperimentConfig c;
  c.command = command;
  c.output_dir = scratch().string();
  return c;
}

// Every file in the run directory except the manifest appears exactly once,
// with a matching digest.
void check_manifest(const fs::path& dir) {
  const auto m = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(m.at("schema_version") == kManifestSchemaVersion);
  CHECK(m.contains("version"));
  CHECK(m.contains("wall_clock_seconds"));
  CHECK(m.contains("config"));
  std::set<std::string> listed;
  for (const auto& f : m.at("files")) {
    const std::string name = f.at("name");
    CHECK(listed.insert(name).second);
    CHECK(f.at("sha256") == sha256_file(dir / name));
    CHECK(f.at("bytes") == fs::file_size(dir / name));
  }
  std::set<std::string> present;
  for (const auto& e : fs::directory_iterator(dir)) present.insert(e.path().filename().string());
  present.erase("manifest.json");
  CHECK(listed == present);
  for (const auto& name : present) {
    const std::string body = slurp(dir / name);
    if (name.ends_with(".csv")) {
      CHECK(body.find('\n') != std::string::npos);
      CHECK(std::isalpha(static_cast<unsigned char>(body[0])));
    } else if (name.ends_with(".json") && name != "config.json") {
      CHECK(nlohmann::json::parse(body).contains("schema_version"));
    }
  }
}

}  // namespace

TEST_CASE("sha256") {
  CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

TEST_CASE("number formatting") {
  CHECK(fmt17(0.1) == "0.10000000000000001");
  CHECK(fmt17(1.0) == "1");
}

TEST_CASE("config json round trip") {
  ExperimentConfig c = base("evl");
  c.family = "rcf";
  c.r_grid = {0.5, 1, 2};
  c.n_grid = {256, 1024};
  c.precision = 640;
  c.C = 1.875;
  c.seed = 99;
  const auto j = to_json(c);
  CHECK(j.at("schema_version") == kConfigSchemaVersion);
  const auto back = config_from_json(j);
  CHECK(to_json(back) == j);
  CHECK(back.precision == std::optional<std::size_t>(640));
  CHECK(back.C == std::optional<double>(1.875));

  auto bad = j;
  bad["colour"] = "blue";
  CHECK_THROWS_AS(config_from_json(bad), InvalidArgument);

  const auto path = scratch() / "cfg.json";
  std::ofstream(path) << j.dump(2);
  CHECK(to_json(load_config(path.string())) == j);
  CHECK_THROWS_AS(load_config((scratch() / "missing.json").string()), InvalidArgument);
}

TEST_CASE("validation") {
  auto c = base("evl");
  CHECK_NOTHROW(validate(c));
  c.family = "gcf";
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c = base("evl");
  c.samples = 10;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c = base("evl");
  c.r_grid = {1, -2};
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c = base("density");
  c.resolution = 33;
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c = base("constants");
  c.j_grid = {8, 12};
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c = base("launch");
  CHECK_THROWS_AS(validate(c), InvalidArgument);
  c = base("rate");
  c.family = "hccf";
  CHECK_THROWS_AS(validate(c), InvalidArgument);
}

TEST_CASE("command line flags") {
  ExperimentConfig c;
  CLI::App app;
  bind_flags(app, c);
  ::setenv(kSeedEnv, "777", 1);
  app.parse("--family rcf --r 0.5,1,2 --n-grid 256,1024 --j-grid 4,6,8 --c 1.9 --precision 512", false);
  ::unsetenv(kSeedEnv);
  CHECK(c.family == "rcf");
  CHECK(c.r_grid == std::vector<double>{0.5, 1, 2});
  CHECK(c.n_grid == std::vector<std::size_t>{256, 1024});
  CHECK(c.j_grid == std::vector<double>{4, 6, 8});
  CHECK(c.C == std::optional<double>(1.9));
  CHECK(c.precision == std::optional<std::size_t>(512));
  CHECK(c.seed == 777);

  ExperimentConfig d;
  CLI::App app2;
  bind_flags(app2, d);
  app2.parse("--seed 5 --r-grid 3", false);
  CHECK(d.seed == 5);
  CHECK(d.r_grid == std::vector<double>{3});
}

TEST_CASE("expand command writes a manifest") {
  auto c = base("expand");
  c.family = "rcf";
  c.input = "pi";
  c.digits = 24;
  const auto res = run_command(c);
  CHECK(res.summary.at("digits") ==
        nlohmann::json({7, 15, 1, 292, 1, 1, 1, 2, 1, 3, 1, 14, 2, 1, 1, 2, 2, 2, 2, 1, 84, 2, 1, 1}));
  CHECK(fs::exists(res.dir / "expansion.json"));
  CHECK(fs::exists(res.dir / "digits.csv"));
  CHECK(fs::exists(res.dir / "config.json"));
  CHECK(res.dir.filename().string().rfind("expand-", 0) == 0);
  check_manifest(res.dir);
  const auto cfg = nlohmann::json::parse(slurp(res.dir / "config.json"));
  CHECK(config_from_json(cfg).digits == 24);

  c.family = "hccf";
  c.input = "0.3+0.2i";
  c.digits = 10;
  const auto h = run_command(c);
  CHECK(h.summary.at("status") == "terminated");
  check_manifest(h.dir);
}

TEST_CASE("runs reproduce byte-identical tables for any worker count") {
  auto c = base("evl");
  c.family = "rcf";
  c.n = 64;
  c.samples = 1000;
  c.r_grid = {0.5, 1, 2};
  c.workers = 1;
  const auto a = run_command(c);
  c.workers = 3;
  const auto b = run_command(c);
  CHECK(a.dir != b.dir);
  CHECK(slurp(a.dir / "evl.csv") == slurp(b.dir / "evl.csv"));
  check_manifest(a.dir);

  auto p = base("poisson");
  p.n = 64;
  p.samples = 1000;
  p.workers = 2;
  const auto pa = run_command(p);
  p.workers = 1;
  CHECK(slurp(pa.dir / "poisson.csv") == slurp(run_command(p).dir / "poisson.csv"));
  check_manifest(pa.dir);

  auto d = base("density");
  d.samples = 3000;
  d.resolution = 8;
  d.workers = 2;
  const auto da = run_command(d);
  d.workers = 1;
  const auto db = run_command(d);
  CHECK(slurp(da.dir / "density.csv") == slurp(db.dir / "density.csv"));
  CHECK(slurp(da.dir / "regions.csv") == slurp(db.dir / "regions.csv"));
  check_manifest(da.dir);

  auto n = base("demo-naive");
  n.points = 20;
  n.iters = 30;
  const auto na = run_command(n);
  CHECK(na.summary.at("violations") == 0);
  CHECK(slurp(na.dir / "naive.csv") == slurp(run_command(n).dir / "naive.csv"));
  check_manifest(na.dir);
}

TEST_CASE("tail and rate commands") {
  auto t = base("tail");
  t.family = "nicf";
  t.tail_j = {2, 10, 100};
  const auto tr = run_command(t);
  check_manifest(tr.dir);

  auto r = base("rate");
  r.family = "nicf";
  r.n_grid = {32, 64};
  r.samples = 1000;
  const auto rr = run_command(r);
  CHECK(fs::exists(rr.dir / "rate.csv"));
  check_manifest(rr.dir);
}

TEST_CASE("hccf runs take constants from a file and record provenance") {
  auto k = base("constants");
  k.samples = 200000;
  k.j_grid = {4, 5, 6};
  const auto kr = run_command(k);
  check_manifest(kr.dir);
  const auto path = kr.dir / "constants.json";
  const auto record = nlohmann::json::parse(slurp(path));
  CHECK(record.contains("C_tilde"));

  auto e = base("evl");
  e.family = "hccf";
  e.n = 16;
  e.samples = 1000;
  CHECK_THROWS_AS(run_command(e), MissingConstants);
  e.constants = path.string();
  const auto er = run_command(e);
  const auto m = nlohmann::json::parse(slurp(er.dir / "manifest.json"));
  const std::string digest = sha256_file(path);
  CHECK(m.dump().find(digest) != std::string::npos);
  CHECK(m.dump().find("j_grid") != std::string::npos);
  check_manifest(er.dir);

  e.constants.clear();
  e.C = 1.8;
  CHECK_NOTHROW(run_command(e));
}

TEST_CASE("errors become machine-readable json") {
  const auto j = error_json(MissingConstants("no constants"));
  CHECK(j.at("error") == "MissingConstants");
  CHECK(j.at("message") == "no constants");
  CHECK(error_json(std::runtime_error("x")).at("error") == "internal");

  auto c = base("expand");
  c.family = "rcf";
  c.input = "0.25+0.5i";
  CHECK_THROWS_AS(run_command(c), InvalidArgument);
}
