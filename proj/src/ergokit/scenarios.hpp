#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ergokit/dataset.hpp"

namespace ergokit {

// Scenario configuration, parsed from JSON:
//   {"scenario": "...", "format": "csv"|"json", "params": {...}}
// Unknown scenarios, unknown parameter keys and ill-typed values raise
// BadConfig. Every scenario ships the reference figure parameters as
// defaults, so an empty params object reproduces the matching dataset.
struct ScenarioRequest {
  std::string scenario;
  std::string format = "csv";
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
};

ScenarioRequest parse_request(const std::string& config_json);

std::vector<std::string> scenario_names();

// Builds the dataset for a parsed request; output depends only on the
// request, never on wall clock or environment.
Dataset run_scenario(const ScenarioRequest& req);

// Serialized bytes in the requested format.
std::string run_scenario_bytes(const std::string& config_json);

struct SelftestResult {
  struct Entry {
    std::string name;
    bool passed;
    std::string detail;
  };
  std::vector<Entry> entries;
  bool all_passed() const;
  std::string report() const;  // one line per suite
};

// Oracle-equivalence suites: brute-force ergotropy vs the closed-form
// splits, Fock assembly vs the Gaussian formulas, RK4/moment flow vs the
// decay solutions, exponential vs closed-form propagation. `mutate` names
// a suite whose closed-form side is skewed by 1e-6, for checking that the
// suite actually bites; empty means no mutation.
SelftestResult run_selftest(const std::string& mutate = "", uint64_t seed = 12345);

}  // namespace ergokit
