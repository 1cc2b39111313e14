#pragma once

#include "plap/reports.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace plap::cli {

struct SuiteResult {
  std::string suite;
  std::vector<EstimateReport> reports;
  bool all_pass = false;
};

// Verification suites over built-in benchmark fields; `config` may override
// the documented defaults (levels, seed, cases) and is validated first.
SuiteResult run_identity_suite(const nlohmann::json& config);
SuiteResult run_elliptic_suite(const nlohmann::json& config);
SuiteResult run_parabolic_suite(const nlohmann::json& config);
SuiteResult run_suite(const std::string& name, const nlohmann::json& config);

std::vector<std::string> suite_names();

}  // namespace plap::cli
