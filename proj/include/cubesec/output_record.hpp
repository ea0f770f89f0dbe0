#pragma once

#include "json.hpp"

#include <string>
#include <vector>

namespace cubesec {

/// Envelope shared by every subcommand. Bump kSchemaVersion on any field change.
struct OutputRecord {
  static constexpr const char* kSchemaVersion = "1.0";

  std::string schema_version = kSchemaVersion;
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;

  nlohmann::ordered_json to_json() const;
  /// Throws nlohmann::json::exception on missing or mistyped fields.
  static OutputRecord from_json(const nlohmann::ordered_json& j);

  std::string dump(int indent = 2) const;
  static OutputRecord parse(const std::string& text);

  bool operator==(const OutputRecord&) const = default;
};

}  // namespace cubesec
