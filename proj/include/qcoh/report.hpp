#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qcoh {

// One verified claim. Equality checks use margin = |lhs - rhs|; one-sided
// checks use margin = lhs - rhs (negative = satisfied with room). A row
// passes iff margin <= tolerance.
struct CheckRow {
  std::string id;
  std::string anchor;  // short label tying the row to the underlying relation
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::string mset = "-";
  double wall_ms = 0.0;  // carried in memory, printed in summaries; not serialized
  std::vector<CheckRow> checks;

  bool all_pass() const;

  void add_equality(const std::string& id, const std::string& anchor, double lhs, double rhs,
                    double tolerance);
  // Asserts lhs <= rhs + tolerance.
  void add_upper_bound(const std::string& id, const std::string& anchor, double lhs, double rhs,
                       double tolerance);

  void append(const VerificationReport& other);
};

std::string report_to_json(const VerificationReport& report);
VerificationReport report_from_json(const std::string& text);

std::string report_to_table(const VerificationReport& report);

}  // namespace qcoh
