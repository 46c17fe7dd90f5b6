#include "cfevt/runner/manifest.hpp"

#include <array>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include <openssl/evp.h>

#include "cfevt/errors.hpp"

namespace cfevt {
namespace {

std::string utc_stamp(std::chrono::system_clock::time_point t, const char* fmt) {
  const std::time_t tt = std::chrono::system_clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::array<char, 64> buf{};
  std::strftime(buf.data(), buf.size(), fmt, &tm);
  return buf.data();
}

std::filesystem::path fresh_dir(const std::filesystem::path& root, const std::string& base) {
  std::filesystem::path p = root / base;
  for (int i = 1; std::filesystem::exists(p); ++i) p = root / (base + "-" + std::to_string(i));
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

std::string sha256_hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error("io", "SHA-256 failed");
  }
  std::string hex;
  hex.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    std::array<char, 3> b{};
    std::snprintf(b.data(), b.size(), "%02x", md[i]);
    hex += b.data();
  }
  return hex;
}

std::string sha256_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return sha256_hex(ss.str());
}

RunWriter::RunWriter(const ExperimentConfig& cfg, std::filesystem::path root)
    : cfg_(cfg), started_(std::chrono::system_clock::now()), t0_(std::chrono::steady_clock::now()) {
  dir_ = fresh_dir(root, cfg.command + "-" + utc_stamp(started_, "%Y%m%dT%H%M%SZ"));
}

void RunWriter::write_text(const std::string& name, const std::string& body) {
  std::ofstream out(dir_ / name, std::ios::binary);
  out << body;
  if (!out) throw Error("io", "cannot write " + (dir_ / name).string());
  files_.push_back({name, sha256_hex(body), body.size()});
}

void RunWriter::write_json(const std::string& name, const nlohmann::json& j) {
  write_text(name, j.dump(2) + "\n");
}

void RunWriter::annotate(const std::string& key, nlohmann::json value) { extra_[key] = std::move(value); }

nlohmann::json RunWriter::finish() {
  write_json("config.json", to_json(cfg_));
  nlohmann::json m;
  m["schema_version"] = kManifestSchemaVersion;
  m["tool"] = "cfevt";
  m["version"] = CFEVT_VERSION;
  m["command"] = cfg_.command;
  m["config"] = to_json(cfg_);
  m["started_utc"] = utc_stamp(started_, "%Y-%m-%dT%H:%M:%SZ");
  m["wall_clock_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
  auto files = nlohmann::json::array();
  for (const auto& f : files_) files.push_back({{"name", f.name}, {"sha256", f.digest}, {"bytes", f.bytes}});
  m["files"] = files;
  for (const auto& [k, v] : extra_.items()) m[k] = v;
  std::ofstream out(dir_ / "manifest.json");
  out << m.dump(2) << "\n";
  return m;
}

}  // namespace cfevt
