#pragma once

#include "ghc/io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ghc {

inline constexpr const char* kModuleVersion = "ghc-1.0.0";

inline constexpr const char* kTasks[] = {"homology", "growth",   "seminorm",      "pairing",
                                         "bound",    "norms",    "identity-suite"};

/// A validated batch job. Referenced files (group files, chain files) are
/// inlined on load, so the digest covers their contents.
struct JobConfig {
  std::string job_id = "job";
  std::string group = "S3";
  /// Contents of the group file when `group` names a file.
  std::string group_text;
  std::string task;
  std::uint64_t seed = 1;
  std::size_t cap = kDefaultBallCap;
  Convention convention = Convention::Standard;
  std::string out = "out";
  bool use_cache = true;
  Json params = Json::object();

  /// Throws ConfigError listing every invalid field. Relative paths resolve
  /// against base_dir.
  static JobConfig from_json(const Json& j, const std::string& base_dir = ".");

  Group make_group() const;
  /// Fields that determine the results (excludes job id, output and cache flags).
  Json canonical() const;
  /// FNV-1a of the canonical form and the module version, as 16 hex digits.
  std::string digest() const;
};

struct RunReport {
  std::string job_id;
  std::string task;
  std::string digest;
  Json results;
  bool passed = false;
  double wall_time_s = 0.0;
  std::size_t cache_hits = 0;

  Json to_json() const;
};

/// Deterministic given the config. Results carry a top-level "passed".
Json compute_results(const JobConfig& config);

/// Runs the job, consulting and filling <out>/.cache/<digest>.json, and
/// writes <out>/<job>.results.json and <out>/<job>.report.json atomically
/// when write_outputs is set.
RunReport run_job(const JobConfig& config, bool write_outputs = true);

/// Cochain from a description such as {"type": "area", "i": 0, "j": 1}. Descriptions may
/// nest through "sum", "product", "scale" and "coboundary", and any description
/// accepts "normalize": true.
Cochain cochain_from_json(const Group& group, const Json& desc);

/// Built-in groups and cochain families, plus every *.group file in
/// user_dir (missing or empty directory: built-ins only).
Json list_builtins(const std::string& user_dir = "");

/// 0 when every verdict passes, 1 otherwise.
int exit_code(const RunReport& report);

}  // namespace ghc
