#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lnq/qscalar.hpp"
#include "lnq/relcheck.hpp"
#include "lnq/splitdec.hpp"
#include "lnq/tmod.hpp"

namespace lnq {

// Machine-readable verification record. Serialized with a stable schema:
// top-level keys schema_version, params, checks, decomposition, splits,
// summary. Non-integer rationals are serialized as "a/b" strings, never as
// floats; reports are byte-deterministic apart from the elapsed_ms fields.
struct VerificationReport {
  int schema_version = 1;
  int n = 0;
  long q = 0;
  Rat phi;
  std::vector<CheckResult> checks;
  std::vector<EndpointMultiplicity> decomposition;  // empty when modules did not run
  SplitSummary splits;                              // empty when splits did not run
  std::int64_t elapsed_ms = 0;

  long pass_count() const;
  long fail_count() const;
};

std::string report_to_json(const VerificationReport& report);
// One line per check plus a summary, for console output.
std::string report_to_text(const VerificationReport& report);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace lnq
