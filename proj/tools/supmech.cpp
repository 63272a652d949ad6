// Command-line front end: one subcommand per verification suite, configs
// merged with per-flag overrides, reports to stdout and optionally to disk.
// Exit codes: 0 pass, 1 check failure, 2 config or usage error, 3 I/O error.

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "supmech/error.hpp"
#include "supmech/report.hpp"
#include "supmech/scenario.hpp"
#include "supmech/suites.hpp"

namespace {

struct CliOptions {
  std::string config;
  std::string out;
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::optional<long long> jobs;
  std::vector<std::string> sets;
  // Convenience spellings for the most common parameters.
  std::optional<std::string> preset, algebra, state, check, potential;
  std::optional<long long> n;
};

void add_shared_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--config", opt.config,
                  "scenario file (INI key = value, or a JSON object)");
  cmd->add_option("--out", opt.out,
                  "directory for report.json and data artifacts");
  cmd->add_option("--format", opt.format, "stdout rendering")
      ->check(CLI::IsMember({"json", "text"}));
  cmd->add_option("--seed", opt.seed, "seed for suites that draw samples");
  cmd->add_option("--jobs", opt.jobs, "threads for independent work units");
  cmd->add_option("--set", opt.sets,
                  "extra parameter as key=value; repeatable");
}

void merge_flags(supmech::Scenario& sc, const CliOptions& opt) {
  auto put = [&sc](const std::string& key, const std::string& value) {
    sc.params[key] = value;
  };
  for (const std::string& kv : opt.sets) {
    const std::size_t eq = kv.find('=');
    if (eq == std::string::npos || eq == 0)
      throw supmech::ConfigError("--set expects key=value, got '" + kv + "'");
    put(kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (opt.seed) put("seed", std::to_string(*opt.seed));
  if (opt.jobs) put("jobs", std::to_string(*opt.jobs));
  if (!opt.out.empty()) put("out_dir", opt.out);
  if (opt.preset) put("preset", *opt.preset);
  if (opt.algebra) put("algebra", *opt.algebra);
  if (opt.state) put("state", *opt.state);
  if (opt.check) put("check", *opt.check);
  if (opt.potential) put("potential", *opt.potential);
  if (opt.n) put("n", std::to_string(*opt.n));
}

int run_subcommand(const std::string& suite, const CliOptions& opt) {
  supmech::Scenario sc;
  if (!opt.config.empty()) {
    sc = supmech::scenario_from_file(opt.config);
    if (sc.suite.empty()) {
      sc.suite = suite;
    } else if (sc.suite != suite) {
      throw supmech::ConfigError("config selects suite '" + sc.suite +
                                 "' but the command line says '" + suite +
                                 "'");
    }
  } else {
    sc.suite = suite;
  }
  merge_flags(sc, opt);

  const supmech::VerificationReport report = supmech::run_suite(sc);
  const std::string rendered = opt.format == "json"
                                   ? supmech::report_json(report)
                                   : supmech::report_text(report);
  std::fputs(rendered.c_str(), stdout);
  if (!opt.out.empty())
    supmech::write_text_file(opt.out + "/report.json",
                             supmech::report_json(report));
  return report.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"supmech: verification suites for supmech computable content"};
  app.require_subcommand(1);

  std::vector<std::pair<std::string, CliOptions>> runs;
  runs.reserve(supmech::suite_registry().size());
  for (const supmech::SuiteInfo& info : supmech::suite_registry()) {
    runs.emplace_back(info.name, CliOptions{});
    CliOptions& opt = runs.back().second;
    CLI::App* cmd = app.add_subcommand(info.name, info.summary);
    add_shared_flags(cmd, opt);
    if (info.name == "verify-algebra")
      cmd->add_option("--preset", opt.preset,
                      "galilei, galilei-commutator, or galilei-derived");
    if (info.name == "gns") {
      cmd->add_option("--algebra", opt.algebra,
                      "mat:<n>, mat:<n>+<m>, or grassmann:<n>");
      cmd->add_option("--state", opt.state, "e11 or random");
      cmd->add_option("--check", opt.check,
                      "standard, compression, or sectors");
    }
    if (info.name == "grassmann-cc")
      cmd->add_option("--n", opt.n, "generator count");
    if (info.name == "evolve" || info.name == "classical-limit")
      cmd->add_option("--potential", opt.potential, "potential preset");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& [name, opt] : runs)
      if (app.get_subcommand(name)->parsed()) return run_subcommand(name, opt);
    std::fputs("no suite selected\n", stderr);
    return 2;
  } catch (const supmech::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const supmech::IoError& e) {
    std::fprintf(stderr, "i/o error: %s\n", e.what());
    return 3;
  } catch (const supmech::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
