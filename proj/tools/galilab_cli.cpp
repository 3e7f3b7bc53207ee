#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "galilab/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitConfigError = 2;

int run_suites(const galilab::SuiteConfig& cfg,
               const std::vector<std::string>& names, const std::string& out,
               bool timings) {
  std::filesystem::create_directories(out);
  std::vector<galilab::SuiteReport> reports;
  bool all_pass = true;
  for (const auto& name : names) {
    reports.push_back(galilab::run_suite(name, cfg, out));
    const auto& rep = reports.back();
    all_pass = all_pass && rep.pass();
    std::cout << rep.name << ": " << (rep.pass() ? "pass" : "FAIL") << '\n';
    for (const auto& check : rep.checks) {
      if (!check.pass()) {
        std::cout << "  " << check.name << " deviation " << check.deviation
                  << (check.exceed ? " not above " : " exceeds ")
                  << check.tolerance << '\n';
      }
    }
  }
  const auto doc = galilab::report_json(cfg, reports, timings);
  std::ofstream file(out + "/report.json");
  if (!file) {
    std::cerr << "cannot write " << out << "/report.json\n";
    return kExitConfigError;
  }
  file << doc.dump(2) << '\n';
  return all_pass ? kExitPass : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification suites for a nonrelativistic gauge field model"};
  app.require_subcommand(1);

  std::string config_path, out_dir = ".";
  std::vector<std::string> only_suites;
  std::uint64_t seed = 0;
  bool have_seed = false, print_config = false, timings = false;

  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--seed", seed, "override the config seed")
      ->each([&](const std::string&) { have_seed = true; });
  app.add_option("--out", out_dir, "report output directory");
  app.add_option("--suite", only_suites,
                 "restrict `all` to the named suites (repeatable)");
  app.add_flag("--print-config", print_config,
               "print the effective config and exit");
  app.add_flag("--timings", timings,
               "include wall times in the report (breaks byte-identical "
               "reruns)");

  std::vector<std::pair<std::string, std::vector<std::string>>> commands{
      {"group-check", {"group"}},
      {"rep-check", {"rep"}},
      {"gauge-check", {"gauge"}},
      {"eom-check", {"eom"}},
      {"covariance-check", {"covariance"}},
      {"evolve", {"evolve"}},
      {"all", galilab::suite_names()},
  };
  for (auto& [name, suites] : commands) {
    // let --config etc. appear after the subcommand as well
    app.add_subcommand(name, "run the " + name + " suite(s)")->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitPass : kExitConfigError;
  }

  galilab::SuiteConfig cfg;
  try {
    if (!config_path.empty()) {
      std::ifstream file(config_path);
      if (!file) throw std::invalid_argument("cannot open " + config_path);
      cfg = galilab::config_from_json(nlohmann::json::parse(file));
    }
    if (have_seed) cfg.seed = seed;

    if (print_config) {
      std::cout << galilab::config_to_json(cfg).dump(2) << '\n';
      return kExitPass;
    }

    std::vector<std::string> names;
    for (const auto& [name, suites] : commands) {
      if (app.got_subcommand(name)) names = suites;
    }
    if (!only_suites.empty()) {
      std::vector<std::string> filtered;
      for (const auto& want : only_suites) {
        bool known = false;
        for (const auto& name : names) {
          if (name == want) {
            filtered.push_back(name);
            known = true;
          }
        }
        if (!known) throw std::invalid_argument("unknown suite: " + want);
      }
      names = filtered;
    }
    return run_suites(cfg, names, out_dir, timings);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfigError;
  }
}
