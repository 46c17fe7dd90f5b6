#pragma once

// Run directories and their manifests.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "cfevt/runner/config.hpp"

namespace cfevt {

inline constexpr int kManifestSchemaVersion = 1;

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::filesystem::path& p);

/// Collects the files of one run under runs/<command>-<timestamp>/ and writes
/// manifest.json listing each with its digest.
class RunWriter {
 public:
  RunWriter(const ExperimentConfig& cfg, std::filesystem::path root);

  const std::filesystem::path& dir() const { return dir_; }
  void write_text(const std::string& name, const std::string& body);
  void write_json(const std::string& name, const nlohmann::json& j);
  /// Extra manifest fields, e.g. constants provenance.
  void annotate(const std::string& key, nlohmann::json value);
  /// Writes config.json and manifest.json; returns the manifest.
  nlohmann::json finish();

 private:
  struct Entry {
    std::string name;
    std::string digest;
    std::uintmax_t bytes;
  };
  ExperimentConfig cfg_;
  std::filesystem::path dir_;
  std::vector<Entry> files_;
  nlohmann::json extra_ = nlohmann::json::object();
  std::chrono::system_clock::time_point started_;
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace cfevt
