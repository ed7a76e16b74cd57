#include "thetamix/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "thetamix/error.hpp"

namespace thetamix {

std::string RunManifest::to_json() const {
  nlohmann::ordered_json doc;
  doc["command"] = command;
  doc["inputs"] = inputs;
  doc["constants_fingerprint"] = constants_fingerprint;
  doc["outputs"] = outputs;
  doc["wall_time_s"] = wall_time_s;
  return doc.dump(2) + "\n";
}

RunManifest RunManifest::from_json(const std::string& text) {
  const auto doc = nlohmann::json::parse(text);
  RunManifest m;
  m.command = doc.at("command").get<std::string>();
  m.inputs = doc.at("inputs").get<std::map<std::string, std::string>>();
  m.constants_fingerprint = doc.at("constants_fingerprint").get<std::string>();
  m.outputs = doc.at("outputs").get<std::vector<std::string>>();
  m.wall_time_s = doc.at("wall_time_s").get<double>();
  return m;
}

std::filesystem::path RunManifest::default_path() const {
  if (outputs.empty()) throw UsageError("manifest has no outputs to sit next to");
  return std::filesystem::path(outputs.front() + ".manifest.json");
}

void RunManifest::write(const std::filesystem::path& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write manifest " + path.string());
  out << to_json();
}

}  // namespace thetamix
