#pragma once

#include <string>

#include <nlohmann/json.hpp>

namespace stretchkit {

/// Outcome of a verification check. Serializes as
/// {"check": name, "passed": bool, "details": ...}.
struct CheckReport {
  std::string check;
  bool passed = true;
  nlohmann::json details = nlohmann::json::object();

  nlohmann::json to_json() const {
    return {{"check", check}, {"passed", passed}, {"details", details}};
  }
};

}  // namespace stretchkit
