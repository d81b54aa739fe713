#pragma once

// Run configuration, check orchestration and the combined run report.
//
// Config schema (JSON):
//   instance          {kind, rank?, denominator_bound?}               required
//   fesspe            ["a","b"] or "{a,b}"                             optional
//   radius            n, or {"default": n, "<check>": n, ...}          default 3
//   checks            "all" or a list of check names                   default "all"
//   seed              unsigned integer                                 default 0
//   sampling          {exhaustive_limit, samples}                      optional
//   out               report path                                      optional

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qlat/monoid.hpp"
#include "qlat/report.hpp"
#include "qlat/sampling.hpp"

namespace qlat {

/// Every check name, in execution order.
const std::vector<std::string>& check_order();

/// Checks skipped when the candidate F is not a finite exhaustive set.
bool depends_on_fesspe(std::string_view check);

struct RunConfig {
  InstanceConfig instance;
  /// Textual elements of the candidate F; empty means the instance default.
  std::vector<std::string> fesspe;
  int radius = 3;
  std::map<std::string, int> radii;
  /// Subset of check_order(); empty means all.
  std::vector<std::string> checks;
  SamplingPolicy sampling{2'000'000, 20'000, 0};
  std::string out;
  bool timing = false;

  /// Throws ConfigError on unknown keys, bad values or unknown checks.
  static RunConfig from_json(const nlohmann::json& j);
  static RunConfig from_text(std::string_view text);
  nlohmann::ordered_json to_json() const;

  int radius_for(std::string_view check) const;
  std::vector<std::string> enabled_checks() const;
};

struct RunReport {
  nlohmann::ordered_json config;
  std::vector<CheckReport> checks;
  std::vector<double> seconds;
  bool timing = false;

  bool failed() const;
  /// 0 when no check failed, 1 otherwise.
  int exit_code() const { return failed() ? 1 : 0; }
  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

/// The candidate F from the config, or the instance default (its generators
/// when P is finitely generated by a ball of radius one). Absent when
/// neither exists.
std::optional<std::vector<Element>> resolve_fesspe(const Monoid& m, const RunConfig& config);

/// Runs the enabled checks in order. Checks depending on a finite
/// exhaustive set are skipped with a reason when F fails to be one.
RunReport run(const RunConfig& config);

/// First F (by size, then ball order) of at most `max_size` elements of
/// ball(radius) minus e that passes is_fesspe at that radius.
std::optional<std::vector<Element>> find_fesspe(const Monoid& m, int max_size, int radius);

}  // namespace qlat
