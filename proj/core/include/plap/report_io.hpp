#pragma once

#include "plap/reports.hpp"

#include <string>
#include <vector>

namespace plap {

// One row per report: name,n,p,gamma,h,lhs,rhs_raw,ratio,pass,statement.
// gamma/dt cells are empty when not applicable. RFC-4180 quoting.
std::string report_csv_header();
std::string report_csv_row(const EstimateReport& r);
std::string reports_csv(const std::vector<EstimateReport>& reports);

// JSON object per report, and a suite summary {suite, all_pass, reports}.
std::string report_json(const EstimateReport& r, int indent = -1);
std::string suite_summary_json(const std::string& suite,
                               const std::vector<EstimateReport>& reports,
                               bool all_pass, int indent = 2);

std::string sharpness_csv(const SharpnessScan& scan);

}  // namespace plap
