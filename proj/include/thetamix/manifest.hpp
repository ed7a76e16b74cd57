#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace thetamix {

/// Record written next to every file a CLI run produces.
struct RunManifest {
  std::string command;
  std::map<std::string, std::string> inputs;
  std::string constants_fingerprint;
  std::vector<std::string> outputs;
  double wall_time_s = 0.0;

  std::string to_json() const;
  static RunManifest from_json(const std::string& text);

  /// "<first output>.manifest.json".
  std::filesystem::path default_path() const;
  void write(const std::filesystem::path& path) const;
};

}  // namespace thetamix
