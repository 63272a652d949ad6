// Scenario parsing (INI and flat JSON) and typed parameter access with
// unknown-key rejection.

#include "supmech/scenario.hpp"

#include <json.hpp>

#include <cctype>
#include <fstream>
#include <sstream>

namespace supmech {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

void insert_param(Scenario& sc, const std::string& key,
                  const std::string& value, int line_no) {
  if (key == "suite") {
    if (!sc.suite.empty())
      throw ConfigError("duplicate suite selection at line " +
                        std::to_string(line_no));
    sc.suite = value;
    return;
  }
  if (!sc.params.emplace(key, value).second)
    throw ConfigError("duplicate key '" + key + "' at line " +
                      std::to_string(line_no));
}

Scenario parse_ini(const std::string& text) {
  Scenario sc;
  std::istringstream in(text);
  std::string line, section;
  int line_no = 0;
  bool saw_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#' || t[0] == ';') continue;
    if (t.front() == '[') {
      if (t.back() != ']' || t.size() < 3)
        throw ConfigError("malformed section header at line " +
                          std::to_string(line_no));
      section = trim(t.substr(1, t.size() - 2));
      if (section.empty())
        throw ConfigError("empty section name at line " +
                          std::to_string(line_no));
      continue;
    }
    const std::size_t eq = t.find('=');
    if (eq == std::string::npos)
      throw ConfigError("expected key = value at line " +
                        std::to_string(line_no));
    const std::string key = trim(t.substr(0, eq));
    const std::string value = trim(t.substr(eq + 1));
    if (key.empty())
      throw ConfigError("empty key at line " + std::to_string(line_no));
    const std::string full = section.empty() ? key : section + "." + key;
    insert_param(sc, full, value, line_no);
    saw_content = true;
  }
  if (!saw_content) throw ConfigError("config is empty");
  return sc;
}

std::string scalar_to_string(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number()) return v.dump();
  throw ConfigError("config values must be strings, numbers, or booleans");
}

Scenario parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config JSON must be an object");
  if (doc.empty()) throw ConfigError("config is empty");
  Scenario sc;
  for (const auto& [key, value] : doc.items()) {
    if (key == "suite") {
      if (!value.is_string())
        throw ConfigError("suite must be a string");
      sc.suite = value.get<std::string>();
      continue;
    }
    if (value.is_object()) {
      for (const auto& [inner, iv] : value.items()) {
        if (iv.is_object() || iv.is_array())
          throw ConfigError("config nesting is limited to one level");
        insert_param(sc, key + "." + inner, scalar_to_string(iv), 0);
      }
      continue;
    }
    if (value.is_array())
      throw ConfigError("config arrays are not supported; use a comma list");
    insert_param(sc, key, scalar_to_string(value), 0);
  }
  return sc;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw ConfigError("config is empty");
  return t.front() == '{' ? parse_json(t) : parse_ini(t);
}

Scenario scenario_from_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot read config file " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return parse_scenario(buf.str());
}

bool ParamReader::has(const std::string& key) const {
  return sc_->params.count(key) != 0;
}

const std::string* ParamReader::find(const std::string& key) {
  used_.insert(key);
  const auto it = sc_->params.find(key);
  return it == sc_->params.end() ? nullptr : &it->second;
}

std::string ParamReader::str(const std::string& key,
                             const std::string& fallback) {
  const std::string* v = find(key);
  return v ? *v : fallback;
}

long long ParamReader::integer(const std::string& key, long long fallback) {
  const std::string* v = find(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const long long out = std::stoll(*v, &used);
    if (used != v->size()) throw std::invalid_argument("trailing text");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("parameter '" + key + "' must be an integer, got '" +
                      *v + "'");
  }
}

double ParamReader::real(const std::string& key, double fallback) {
  const std::string* v = find(key);
  if (!v) return fallback;
  try {
    std::size_t used = 0;
    const double out = std::stod(*v, &used);
    if (used != v->size()) throw std::invalid_argument("trailing text");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("parameter '" + key + "' must be a number, got '" + *v +
                      "'");
  }
}

bool ParamReader::flag(const std::string& key, bool fallback) {
  const std::string* v = find(key);
  if (!v) return fallback;
  if (*v == "true" || *v == "1" || *v == "yes") return true;
  if (*v == "false" || *v == "0" || *v == "no") return false;
  throw ConfigError("parameter '" + key + "' must be a boolean, got '" + *v +
                    "'");
}

std::vector<double> ParamReader::real_list(const std::string& key,
                                           const std::string& fallback) {
  const std::string* v = find(key);
  const std::string text = v ? *v : fallback;
  std::vector<double> out;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const std::string t = trim(item);
    if (t.empty())
      throw ConfigError("parameter '" + key + "' has an empty list element");
    try {
      std::size_t used = 0;
      out.push_back(std::stod(t, &used));
      if (used != t.size()) throw std::invalid_argument("trailing text");
    } catch (const std::exception&) {
      throw ConfigError("parameter '" + key + "' must be a comma list of " +
                        "numbers, got '" + text + "'");
    }
  }
  if (out.empty())
    throw ConfigError("parameter '" + key + "' must list at least one number");
  return out;
}

std::uint64_t ParamReader::seed() {
  const std::string* v = find("seed");
  if (!v)
    throw ConfigError("suite '" + sc_->suite +
                      "' draws random samples and requires a seed");
  const std::string t = trim(*v);
  if (t.empty() || t[0] == '-')
    throw ConfigError("seed must be a nonnegative integer, got '" + *v + "'");
  try {
    std::size_t used = 0;
    const std::uint64_t out = std::stoull(t, &used);
    if (used != t.size()) throw std::invalid_argument("trailing text");
    return out;
  } catch (const std::exception&) {
    throw ConfigError("seed must be a nonnegative integer, got '" + *v + "'");
  }
}

void ParamReader::finish() {
  for (const auto& [key, value] : sc_->params)
    if (!used_.count(key))
      throw ConfigError("unknown parameter '" + key + "' for suite '" +
                        sc_->suite + "'");
}

}  // namespace supmech
