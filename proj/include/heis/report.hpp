#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "heis/lipschitz.hpp"

namespace heis {

struct RunConfig {
  int n = 1;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  long samples = 0;  // 0: per-command default
  std::string format = "text";
  std::string out;  // empty: stdout
  std::string map;
  std::string target;  // flat coordinates, comma separated

  void validate() const;
};

enum class CheckStatus { pass, fail, info };

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::info;
  double observed = 0.0;
  double expected = 0.0;  // value or bound; see note
  double tolerance = 0.0;
  std::string note;
};

// pass iff |observed - expected| <= tolerance
CheckResult check_value(std::string name, double observed, double expected,
                        double tolerance, std::string note = "");
// pass iff observed <= bound
CheckResult check_upper(std::string name, double observed, double bound,
                        std::string note = "");
// pass iff observed >= bound
CheckResult check_lower(std::string name, double observed, double bound,
                        std::string note = "");
CheckResult info_value(std::string name, double observed,
                       std::string note = "");

struct Report {
  std::string command;
  RunConfig config;
  std::vector<CheckResult> results;  // serialized sorted by name
  double wall_time = 0.0;

  bool all_pass() const;
  void add(CheckResult r) { results.push_back(std::move(r)); }
};

// Number formatting used in every serialization: 17 significant digits, so
// identical doubles serialize to identical bytes.
std::string format_double(double v);

// {command, config, results[], wall_time}; results sorted by name; byte
// identical across runs with identical config except for wall_time.
std::string to_json(const Report& report);
std::string to_text(const Report& report);
std::string to_csv(const Report& report);

// Pair-scan dump: one row per sampled pair.
std::string pairs_to_csv(const std::vector<PairSample>& pairs, int n);

// Renders in the requested config.format and writes to config.out or
// stdout. Returns 0 if all checks pass, 1 otherwise.
int emit_report(const Report& report);

}  // namespace heis
