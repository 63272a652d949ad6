#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "supmech/error.hpp"

// A scenario selects a suite and supplies its parameters as strings.  Two
// config formats are accepted: an INI-style listing (key = value lines,
// [section] headers flattened to "section.key", # or ; comment lines) and
// a flat JSON object; a leading '{' selects JSON.  ParamReader hands typed
// values to suites and rejects misspelled or unconsumed keys so a config
// cannot silently misconfigure a run.

namespace supmech {

struct Scenario {
  std::string suite;
  std::map<std::string, std::string> params;
};

// Throws ConfigError on malformed or empty text.
Scenario parse_scenario(const std::string& text);
// Reads and parses; unreadable file is an IoError.
Scenario scenario_from_file(const std::string& path);

class ParamReader {
 public:
  explicit ParamReader(const Scenario& sc) : sc_(&sc) {}

  bool has(const std::string& key) const;
  std::string str(const std::string& key, const std::string& fallback);
  long long integer(const std::string& key, long long fallback);
  double real(const std::string& key, double fallback);
  bool flag(const std::string& key, bool fallback);
  // Comma-separated list of reals.
  std::vector<double> real_list(const std::string& key,
                                const std::string& fallback);
  // Mandatory wherever randomness is drawn; absent seed is a ConfigError.
  std::uint64_t seed();
  // Call after the last read; any unconsumed key is a ConfigError.
  void finish();

 private:
  const std::string* find(const std::string& key);
  const Scenario* sc_;
  std::set<std::string> used_;
};

}  // namespace supmech
