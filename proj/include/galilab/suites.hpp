#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "galilab/dynamics.hpp"
#include "galilab/eom.hpp"

namespace galilab {

/// One named deviation measurement. `exceed` checks pass when the deviation
/// is strictly above the threshold (used for non-invariance witnesses).
struct CheckResult {
  std::string name;
  double deviation = 0.0;
  double tolerance = 0.0;
  bool exceed = false;

  bool pass() const {
    return exceed ? deviation > tolerance : deviation <= tolerance;
  }
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  std::vector<std::pair<std::string, std::string>> notes;
  double wall_ms = 0.0;

  bool pass() const;
};

/// Everything a suite run depends on. Defaults reproduce the certification
/// settings; the tolerance map may override individual thresholds and
/// `tolerance_scale` rescales all of them (0 forces every check to fail).
struct SuiteConfig {
  std::uint64_t seed = 20260823;
  ModelParams params{1.0, 1.0, 1.0};
  std::string f_choice = "maxwell";  // or "quartic"
  double kappa = 0.1;
  std::string cocycle = "auto";  // "auto", "r2-on-a1", "as-written"

  int group_cases = 1000;
  int rep_pairs = 100;
  int rep_points = 10;
  int lagrangian_points = 10000;
  int residual_points = 200;
  int covariance_points = 200;
  int covariance_elements = 25;
  long evolve_steps = 1000;
  SchrodingerGridSpec grid{1, 128, 6.283185307179586};

  double tolerance_scale = 1.0;
  std::map<std::string, double> tolerances;  // overrides of the defaults
};

/// Built-in thresholds, keyed by check family.
const std::map<std::string, double>& default_tolerances();

/// Effective threshold for a key (override or default, times the scale).
double effective_tolerance(const SuiteConfig& cfg, const std::string& key);

/// Canonical suite order: group, rep, gauge, eom, covariance, evolve.
const std::vector<std::string>& suite_names();

/// Runs one suite. `out_dir` nonempty lets the evolve suite drop its
/// time-series CSV there. Throws std::invalid_argument for unknown names.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg,
                      const std::string& out_dir = "");

/// Merges a (possibly partial) JSON document over the defaults. Unknown
/// keys, malformed values, nonpositive counts and negative tolerances throw
/// std::invalid_argument.
SuiteConfig config_from_json(const nlohmann::json& j);

nlohmann::ordered_json config_to_json(const SuiteConfig& cfg);

/// FNV-1a hash of the serialized config, as fixed-width hex.
std::string config_hash_hex(const SuiteConfig& cfg);

/// Full report document {version, seed, config, suites:[...]} with stable
/// key order; suites sorted by name. Wall times are emitted as null unless
/// `timings` is set, so equal (config, seed) runs serialize byte-identically.
nlohmann::ordered_json report_json(const SuiteConfig& cfg,
                                   const std::vector<SuiteReport>& reports,
                                   bool timings = false);

}  // namespace galilab
