#include "lnq/driver.hpp"

#include <chrono>
#include <memory>
#include <stdexcept>

#include "lnq/cache.hpp"

namespace lnq {

std::optional<Suite> parse_suite(std::string_view name) {
  if (name == "core") return Suite::kCore;
  if (name == "qpoly") return Suite::kQPoly;
  if (name == "modules") return Suite::kModules;
  if (name == "splits") return Suite::kSplits;
  if (name == "all") return Suite::kAll;
  return std::nullopt;
}

std::string suite_name(Suite suite) {
  switch (suite) {
    case Suite::kCore:
      return "core";
    case Suite::kQPoly:
      return "qpoly";
    case Suite::kModules:
      return "modules";
    case Suite::kSplits:
      return "splits";
    case Suite::kAll:
      return "all";
  }
  return "all";
}

RunOutcome run_verification(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();

  std::unique_ptr<SubspacePoset> poset;
  int n = config.n;
  long q = config.q;
  if (config.cache_path) {
    poset = std::make_unique<SubspacePoset>(
        load_poset_cache(*config.cache_path, config.max_vertices));
    if (n != 0 && n != poset->n())
      throw std::invalid_argument("configured n disagrees with the cache");
    if (q != 0 && q != poset->field().q())
      throw std::invalid_argument("configured q disagrees with the cache");
    n = poset->n();
    q = poset->field().q();
  } else {
    if (n == 0 || q == 0) throw std::invalid_argument("n and q are required");
    const PrimePower pp = factor_prime_power(q);
    poset = std::make_unique<SubspacePoset>(n, FieldCtx(pp.p, pp.k), config.max_vertices);
  }
  const Params params(n, q, config.phi);
  const OperatorSet ops(*poset, params);

  VerificationReport report;
  report.n = n;
  report.q = q;
  report.phi = config.phi;

  const auto append = [&report](std::vector<CheckResult> results) {
    for (CheckResult& r : results) report.checks.push_back(std::move(r));
  };

  const bool core = config.suite == Suite::kCore || config.suite == Suite::kAll;
  const bool qpoly = config.suite == Suite::kQPoly || config.suite == Suite::kAll;
  const bool modules = config.suite == Suite::kModules || config.suite == Suite::kAll;
  const bool splits = config.suite == Suite::kSplits || config.suite == Suite::kAll;

  if (core) {
    append(check_subconstituent(ops));
    append(check_qserre(ops));
    append(check_tridiagonal(ops));
    append(check_uq_relations(ops));
    append(check_diagonalizability(ops));
  }
  if (qpoly) append(check_qpoly(ops));
  if (modules) {
    Decomposition dec;
    append(run_module_suite(ops, &dec));
    report.decomposition = std::move(dec.endpoints);
  }
  if (splits) {
    SplitSummary summary;
    append(run_split_suite(ops, &summary));
    report.splits = std::move(summary);
  }

  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();

  if (config.report_path) write_text_file(*config.report_path, report_to_json(report));

  RunOutcome outcome;
  outcome.exit_code = all_passed(report.checks) ? 0 : 1;
  outcome.report = std::move(report);
  return outcome;
}

}  // namespace lnq
