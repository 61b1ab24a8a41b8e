#include "qcoh/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "qcoh/errors.hpp"

namespace qcoh {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRow& c) { return c.pass; });
}

void VerificationReport::add_equality(const std::string& id, const std::string& anchor, double lhs,
                                      double rhs, double tolerance) {
  CheckRow row{id, anchor, lhs, rhs, std::abs(lhs - rhs), tolerance, false};
  row.pass = row.margin <= tolerance;
  checks.push_back(std::move(row));
}

void VerificationReport::add_upper_bound(const std::string& id, const std::string& anchor,
                                         double lhs, double rhs, double tolerance) {
  CheckRow row{id, anchor, lhs, rhs, lhs - rhs, tolerance, false};
  row.pass = row.margin <= tolerance;
  checks.push_back(std::move(row));
}

void VerificationReport::append(const VerificationReport& other) {
  for (CheckRow row : other.checks) {
    row.id = other.suite + "/" + row.id;
    checks.push_back(std::move(row));
  }
  wall_ms += other.wall_ms;
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["mset"] = report.mset;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CheckRow& c : report.checks) {
    nlohmann::ordered_json row;
    row["id"] = c.id;
    row["anchor"] = c.anchor;
    row["lhs"] = c.lhs;
    row["rhs"] = c.rhs;
    row["margin"] = c.margin;
    row["tolerance"] = c.tolerance;
    row["pass"] = c.pass;
    rows.push_back(std::move(row));
  }
  j["checks"] = std::move(rows);
  return j.dump(2) + "\n";
}

VerificationReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report JSON: ") + e.what());
  }
  VerificationReport report;
  try {
    report.suite = j.at("suite").get<std::string>();
    report.seed = j.at("seed").get<std::uint64_t>();
    report.mset = j.at("mset").get<std::string>();
    for (const auto& row : j.at("checks")) {
      CheckRow c;
      c.id = row.at("id").get<std::string>();
      c.anchor = row.at("anchor").get<std::string>();
      c.lhs = row.at("lhs").get<double>();
      c.rhs = row.at("rhs").get<double>();
      c.margin = row.at("margin").get<double>();
      c.tolerance = row.at("tolerance").get<double>();
      c.pass = row.at("pass").get<bool>();
      report.checks.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("report fields: ") + e.what());
  }
  return report;
}

std::string report_to_table(const VerificationReport& report) {
  std::size_t id_width = 5;
  std::size_t anchor_width = 6;
  for (const CheckRow& c : report.checks) {
    id_width = std::max(id_width, c.id.size());
    anchor_width = std::max(anchor_width, c.anchor.size());
  }

  std::ostringstream out;
  char buf[256];
  std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %14s  %14s  %10s  %8s  %s\n",
                static_cast<int>(id_width), "check", static_cast<int>(anchor_width), "anchor",
                "lhs", "rhs", "margin", "tol", "status");
  out << buf;
  for (const CheckRow& c : report.checks) {
    std::snprintf(buf, sizeof(buf), "%-*s  %-*s  %14.6g  %14.6g  %10.3g  %8.1g  %s\n",
                  static_cast<int>(id_width), c.id.c_str(), static_cast<int>(anchor_width),
                  c.anchor.c_str(), c.lhs, c.rhs, c.margin, c.tolerance,
                  c.pass ? "pass" : "FAIL");
    out << buf;
  }
  const std::size_t passed =
      static_cast<std::size_t>(std::count_if(report.checks.begin(), report.checks.end(),
                                             [](const CheckRow& c) { return c.pass; }));
  std::snprintf(buf, sizeof(buf), "suite=%s seed=%llu mset=%s: %zu/%zu checks passed (%.1f ms)\n",
                report.suite.c_str(), static_cast<unsigned long long>(report.seed),
                report.mset.c_str(), passed, report.checks.size(), report.wall_ms);
  out << buf;
  return out.str();
}

}  // namespace qcoh
