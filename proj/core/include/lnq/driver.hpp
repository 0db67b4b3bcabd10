#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lnq/report.hpp"

namespace lnq {

enum class Suite { kCore, kQPoly, kModules, kSplits, kAll };

std::optional<Suite> parse_suite(std::string_view name);
std::string suite_name(Suite suite);

struct RunConfig {
  int n = 0;
  long q = 0;
  Rat phi = Rat(1);
  Suite suite = Suite::kAll;
  std::optional<std::string> report_path;
  std::optional<std::string> cache_path;  // load the poset from here when set
  std::size_t max_vertices = SubspacePoset::kDefaultVertexCap;
};

struct RunOutcome {
  int exit_code = 0;  // 0: all checks passed, 1: at least one failed
  VerificationReport report;
};

// Builds the poset (or loads the cache), constructs the operators, runs the
// selected suites, and writes the report when a path is configured. Throws
// std::invalid_argument for configuration problems (exit code 2 territory).
RunOutcome run_verification(const RunConfig& config);

}  // namespace lnq
