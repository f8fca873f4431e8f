#include "wharf/report.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <sstream>

#include "wharf/io.hpp"
#include "wharf/version.hpp"

namespace wharf {

namespace {

using json = nlohmann::ordered_json;

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ",
                tm.tm_year + 1900, tm.tm_mon + 1, tm.tm_mday, tm.tm_hour,
                tm.tm_min, tm.tm_sec);
  return buf;
}

std::string format_residual(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

}  // namespace

bool VerificationReport::overall() const {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

void VerificationReport::add_check(std::string name, std::string anchor,
                                   double residual, double tolerance) {
  CheckResult c;
  c.name = std::move(name);
  c.anchor = std::move(anchor);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  checks.push_back(std::move(c));
}

void VerificationReport::add_flag(std::string name, std::string anchor,
                                  bool ok) {
  add_check(std::move(name), std::move(anchor), ok ? 0.0 : 1.0, 0.5);
}

double VerificationReport::worst_ratio() const {
  double worst = 0.0;
  for (const CheckResult& c : checks) {
    if (c.tolerance > 0.0 && std::isfinite(c.residual)) {
      worst = std::max(worst, c.residual / c.tolerance);
    } else if (!c.pass) {
      worst = std::max(worst, 1.0);
    }
  }
  return worst;
}

std::string report_body_json(const VerificationReport& report) {
  json j;
  j["tool_version"] =
      report.tool_version.empty() ? kToolVersion : report.tool_version;
  json inputs = json::object();
  for (const auto& [path, digest] : report.inputs) {
    inputs[path] = digest;
  }
  j["inputs"] = inputs;
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    json entry;
    entry["name"] = c.name;
    entry["anchor"] = c.anchor;
    entry["residual"] = c.residual;
    entry["tolerance"] = c.tolerance;
    entry["pass"] = c.pass;
    checks.push_back(std::move(entry));
  }
  j["checks"] = checks;
  j["overall"] = report.overall();
  return j.dump(2);
}

std::string report_to_json(const VerificationReport& report) {
  // Splice timestamp and body digest before the closing brace; the digest
  // covers only the canonical body, so it is stable across runs.
  const std::string body = report_body_json(report);
  std::string out = body;      // dump(2) ends "...\n}"
  out.resize(out.size() - 1);  // drop the closing brace; out now ends '\n'
  out.insert(out.size() - 1, ",");  // previous line gains a comma
  out += "  \"timestamp\": " + json(utc_timestamp()).dump() + ",\n";
  out += "  \"digest\": " + json(sha256_hex(body)).dump() + "\n}\n";
  return out;
}

std::string report_to_table(const VerificationReport& report) {
  std::size_t width = 4;
  for (const CheckResult& c : report.checks) {
    width = std::max(width, c.name.size());
  }
  std::ostringstream out;
  for (const CheckResult& c : report.checks) {
    out << (c.pass ? "[ ok ] " : "[FAIL] ") << c.name;
    out << std::string(width - c.name.size() + 2, ' ');
    out << "residual " << format_residual(c.residual) << "  tol "
        << format_residual(c.tolerance);
    if (!c.anchor.empty()) {
      out << "  (" << c.anchor << ")";
    }
    out << "\n";
  }
  out << (report.overall() ? "overall: PASS" : "overall: FAIL") << "\n";
  return out.str();
}

}  // namespace wharf
