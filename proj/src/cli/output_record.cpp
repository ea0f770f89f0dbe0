#include "cubesec/output_record.hpp"

namespace cubesec {

nlohmann::ordered_json OutputRecord::to_json() const {
  nlohmann::ordered_json j;
  j["schema_version"] = schema_version;
  j["command"] = command;
  j["inputs"] = inputs;
  j["results"] = results;
  j["warnings"] = warnings;
  return j;
}

OutputRecord OutputRecord::from_json(const nlohmann::ordered_json& j) {
  OutputRecord r;
  r.schema_version = j.at("schema_version").get<std::string>();
  r.command = j.at("command").get<std::string>();
  r.inputs = j.at("inputs");
  r.results = j.at("results");
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  return r;
}

std::string OutputRecord::dump(int indent) const { return to_json().dump(indent); }

OutputRecord OutputRecord::parse(const std::string& text) { return from_json(nlohmann::ordered_json::parse(text)); }

}  // namespace cubesec
