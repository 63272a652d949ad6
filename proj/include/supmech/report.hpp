#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

// Uniform result container for the verification suites.  Every check
// carries a stable id, a registry anchor, the measured residual, and the
// tolerance it was held to, so a report is auditable without rerunning the
// suite.  Serialization is byte-stable for a fixed config and seed; only
// the run block (timestamp, wall time) differs between runs.

namespace supmech {

struct CheckEntry {
  std::string id;        // unique within one report
  std::string anchor;    // registry anchor naming the class of check
  bool passed = false;
  double residual = 0;   // exact checks report 0 (pass) or 1 (fail)
  double tolerance = 0;  // exact checks are held to 0
  std::string detail;    // optional context, e.g. the mismatching values
};

struct VerificationReport {
  std::string suite;
  std::map<std::string, std::string> config;  // resolved parameters
  bool seeded = false;
  std::uint64_t seed = 0;
  std::vector<CheckEntry> entries;
  double wall_seconds = 0;

  void add_exact(std::string id, std::string_view anchor, bool ok,
                 std::string detail = "");
  void add_residual(std::string id, std::string_view anchor, double residual,
                    double tolerance, std::string detail = "");
  int failures() const;
  bool passed() const { return failures() == 0; }
};

// schema_version 1; stable key order, shortest round-trip numerals.
std::string report_json(const VerificationReport& r);

// Fixed-width table; failed entries are marked FAIL and print their detail
// on a continuation line.
std::string report_text(const VerificationReport& r);

// Writes text to path, creating parent directories; throws IoError.
void write_text_file(const std::string& path, const std::string& text);

// Short decimal form used in ids and details ("0.05", "1e-06").
std::string format_double(double x);

}  // namespace supmech
