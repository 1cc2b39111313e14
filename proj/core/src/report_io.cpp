#include "plap/report_io.hpp"

#include "plap/field_io.hpp"

#include <json.hpp>

#include <cmath>

namespace plap {

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string cell(double v) { return std::isnan(v) ? std::string() : format_double(v); }

nlohmann::json report_to_json(const EstimateReport& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["n"] = r.n;
  if (!std::isnan(r.p)) j["p"] = r.p;
  if (!std::isnan(r.gamma)) j["gamma"] = r.gamma;
  j["eps"] = r.eps;
  j["h"] = r.h;
  if (!std::isnan(r.dt)) j["dt"] = r.dt;
  if (r.region.radius > 0.0) {
    j["region"]["kind"] = r.region.kind == Region::Kind::Ball ? "ball" : "cylinder";
    j["region"]["center"] = {r.region.center[0], r.region.center[1], r.region.center[2]};
    j["region"]["radius"] = r.region.radius;
    if (r.region.kind == Region::Kind::Cylinder)
      j["region"]["time_anchor"] = r.region.time_anchor;
  }
  j["lhs"] = r.lhs;
  j["rhs_raw"] = r.rhs_raw;
  if (!std::isnan(r.ratio)) j["ratio"] = r.ratio;
  j["pass"] = r.pass;
  j["tolerance"] = r.tolerance;
  j["notes"] = r.notes;
  return j;
}

}  // namespace

std::string report_csv_header() {
  return "name,n,p,gamma,h,lhs,rhs_raw,ratio,pass,statement\r\n";
}

std::string report_csv_row(const EstimateReport& r) {
  std::string out;
  out += csv_escape(r.name);
  out += ',';
  out += std::to_string(r.n);
  out += ',';
  out += cell(r.p);
  out += ',';
  out += cell(r.gamma);
  out += ',';
  out += format_double(r.h);
  out += ',';
  out += format_double(r.lhs);
  out += ',';
  out += format_double(r.rhs_raw);
  out += ',';
  out += cell(r.ratio);
  out += ',';
  out += r.pass ? "true" : "false";
  out += ',';
  out += csv_escape(r.statement);
  out += "\r\n";
  return out;
}

std::string reports_csv(const std::vector<EstimateReport>& reports) {
  std::string out = report_csv_header();
  for (const EstimateReport& r : reports) out += report_csv_row(r);
  return out;
}

std::string report_json(const EstimateReport& r, int indent) {
  return report_to_json(r).dump(indent);
}

std::string suite_summary_json(const std::string& suite,
                               const std::vector<EstimateReport>& reports,
                               bool all_pass, int indent) {
  nlohmann::json j;
  j["suite"] = suite;
  j["all_pass"] = all_pass;
  j["report_count"] = reports.size();
  j["reports"] = nlohmann::json::array();
  for (const EstimateReport& r : reports) j["reports"].push_back(report_to_json(r));
  return j.dump(indent);
}

std::string sharpness_csv(const SharpnessScan& scan) {
  std::string out = "h,hessian_energy,p,classification\r\n";
  for (const auto& level : scan.levels) {
    out += format_double(level.h);
    out += ',';
    out += format_double(level.value);
    out += ',';
    out += format_double(scan.p);
    out += ',';
    out += scan.classification;
    out += "\r\n";
  }
  return out;
}

}  // namespace plap
