// Report assembly and rendering: JSON for tooling, a fixed-width table for
// terminals.  The JSON layout is append-only; bump schema_version on any
// breaking change.

#include "supmech/report.hpp"

#include <Eigen/Core>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>

#include "supmech/error.hpp"

namespace supmech {

namespace {

constexpr int kSchemaVersion = 1;

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string compiler_id() {
#if defined(__clang__)
  return std::string("clang ") + __clang_version__;
#elif defined(__GNUC__)
  return std::string("gcc ") + std::to_string(__GNUC__) + "." +
         std::to_string(__GNUC_MINOR__) + "." +
         std::to_string(__GNUC_PATCHLEVEL__);
#else
  return "unknown";
#endif
}

std::string eigen_version() {
  return std::to_string(EIGEN_WORLD_VERSION) + "." +
         std::to_string(EIGEN_MAJOR_VERSION) + "." +
         std::to_string(EIGEN_MINOR_VERSION);
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

void VerificationReport::add_exact(std::string id, std::string_view anchor,
                                   bool ok, std::string detail) {
  entries.push_back(CheckEntry{std::move(id), std::string(anchor), ok,
                               ok ? 0.0 : 1.0, 0.0, std::move(detail)});
}

void VerificationReport::add_residual(std::string id, std::string_view anchor,
                                      double residual, double tolerance,
                                      std::string detail) {
  require(tolerance >= 0, "tolerance must be nonnegative");
  const bool ok = std::isfinite(residual) && residual <= tolerance;
  entries.push_back(CheckEntry{std::move(id), std::string(anchor), ok,
                               residual, tolerance, std::move(detail)});
}

int VerificationReport::failures() const {
  int n = 0;
  for (const CheckEntry& e : entries) n += e.passed ? 0 : 1;
  return n;
}

std::string report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kSchemaVersion;
  j["suite"] = r.suite;
  j["status"] = r.passed() ? "pass" : "fail";
  if (r.seeded) j["seed"] = r.seed;
  j["config"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.config) j["config"][k] = v;
  j["counts"] = {{"checks", r.entries.size()},
                 {"failed", r.failures()}};
  j["entries"] = nlohmann::ordered_json::array();
  for (const CheckEntry& e : r.entries) {
    nlohmann::ordered_json je;
    je["id"] = e.id;
    je["anchor"] = e.anchor;
    je["status"] = e.passed ? "pass" : "fail";
    je["residual"] = e.residual;
    je["tolerance"] = e.tolerance;
    if (!e.detail.empty()) je["detail"] = e.detail;
    j["entries"].push_back(std::move(je));
  }
  j["environment"] = {{"compiler", compiler_id()},
                      {"eigen", eigen_version()}};
  j["run"] = {{"timestamp", utc_timestamp()},
              {"wall_seconds", r.wall_seconds}};
  return j.dump(2) + "\n";
}

std::string report_text(const VerificationReport& r) {
  std::size_t id_w = 2, anchor_w = 6;
  for (const CheckEntry& e : r.entries) {
    id_w = std::max(id_w, e.id.size());
    anchor_w = std::max(anchor_w, e.anchor.size());
  }
  std::string out = "suite " + r.suite + ": " +
                    (r.passed() ? "pass" : "FAIL") + " (" +
                    std::to_string(r.entries.size()) + " checks, " +
                    std::to_string(r.failures()) + " failed";
  if (r.seeded) out += ", seed " + std::to_string(r.seed);
  char wall[32];
  std::snprintf(wall, sizeof wall, ", %.3f s)", r.wall_seconds);
  out += wall;
  out += "\n";

  auto pad = [](const std::string& s, std::size_t w) {
    return s + std::string(w > s.size() ? w - s.size() : 0, ' ');
  };
  out += pad("status", 7) + pad("id", id_w + 2) + pad("anchor", anchor_w + 2) +
         pad("residual", 13) + "tolerance\n";
  for (const CheckEntry& e : r.entries) {
    char res[32], tol[32];
    std::snprintf(res, sizeof res, "%-11.4g", e.residual);
    std::snprintf(tol, sizeof tol, "%.4g", e.tolerance);
    out += pad(e.passed ? "pass" : "FAIL", 7) + pad(e.id, id_w + 2) +
           pad(e.anchor, anchor_w + 2) + pad(res, 13) + tol + "\n";
    if (!e.passed && !e.detail.empty()) out += "       ! " + e.detail + "\n";
  }
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  const std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path())
    std::filesystem::create_directories(p.parent_path(), ec);
  if (ec) throw IoError("cannot create directory " + p.parent_path().string());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw IoError("cannot open " + path + " for writing");
  f << text;
  f.flush();
  if (!f) throw IoError("write to " + path + " failed");
}

}  // namespace supmech
