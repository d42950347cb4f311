#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace adm {

// Pass/fail record with a serialized witness on failure; the witness carries
// the offending element or face so every red check is reproducible.
struct Check {
  std::string name;
  bool pass = false;
  std::string witness;
};

struct Report {
  std::string case_name;
  std::string suite;
  std::vector<Check> checks;

  bool all_pass() const {
    for (const Check& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add(const std::string& name, bool pass, const std::string& witness = "") {
    checks.push_back({name, pass, pass ? "" : witness});
  }

  nlohmann::ordered_json to_json() const {
    nlohmann::ordered_json j;
    j["case"] = case_name;
    j["suite"] = suite;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : checks) {
      nlohmann::ordered_json cj;
      cj["name"] = c.name;
      cj["status"] = c.pass ? "pass" : "fail";
      if (!c.pass) cj["witness"] = c.witness;
      j["checks"].push_back(cj);
    }
    return j;
  }
};

}  // namespace adm
