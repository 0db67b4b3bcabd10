// Command-line driver: enumerate/cache subspace posets and run the exact
// verification suites, emitting JSON reports with a stable schema.
//
// Exit codes: 0 all selected checks passed, 1 at least one check failed (or a
// theorem-backed invariant tripped), 2 usage or configuration error.

#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "lnq/cache.hpp"
#include "lnq/driver.hpp"

namespace {

struct CommonArgs {
  int n = 0;
  long q = 0;
  std::string phi_text = "1";
  std::string suite_text = "all";
  std::string report_path;
  std::string cache_path;
  std::size_t max_vertices = lnq::SubspacePoset::kDefaultVertexCap;
};

void add_param_flags(CLI::App* cmd, CommonArgs& args, bool with_suite) {
  cmd->add_option("--n", args.n, "rank N of the subspace lattice L_N(q)");
  cmd->add_option("--q", args.q, "field size q (a prime power >= 2)");
  cmd->add_option("--phi", args.phi_text,
                  "positive rational weight, an integer or \"a/b\"");
  if (with_suite)
    cmd->add_option("--suite", args.suite_text, "core | qpoly | modules | splits | all");
  cmd->add_option("--report", args.report_path, "write the JSON report to this path");
  cmd->add_option("--cache", args.cache_path, "poset cache file to load instead of enumerating");
  cmd->add_option("--max-vertices", args.max_vertices, "vertex cap for enumeration");
}

lnq::RunConfig make_config(const CommonArgs& args, lnq::Suite forced_suite, bool has_forced) {
  lnq::RunConfig config;
  config.n = args.n;
  config.q = args.q;
  config.phi = lnq::parse_rational(args.phi_text);
  if (config.phi <= 0) throw std::invalid_argument("phi must be positive");
  if (has_forced) {
    config.suite = forced_suite;
  } else {
    const auto suite = lnq::parse_suite(args.suite_text);
    if (!suite) throw std::invalid_argument("unknown suite: " + args.suite_text);
    config.suite = *suite;
  }
  if (!args.report_path.empty()) config.report_path = args.report_path;
  if (!args.cache_path.empty()) config.cache_path = args.cache_path;
  config.max_vertices = args.max_vertices;
  if (!config.cache_path && (config.n == 0 || config.q == 0))
    throw std::invalid_argument("--n and --q are required unless --cache is given");
  return config;
}

int run_suite_command(const CommonArgs& args, std::optional<lnq::Suite> forced) {
  const lnq::RunConfig config =
      make_config(args, forced.value_or(lnq::Suite::kAll), forced.has_value());
  const lnq::RunOutcome outcome = lnq::run_verification(config);
  std::cout << lnq::report_to_text(outcome.report);
  if (forced == lnq::Suite::kModules) {
    std::cout << "decomposition:\n";
    for (const auto& em : outcome.report.decomposition)
      std::cout << "  endpoint " << em.endpoint << ": multiplicity " << em.multiplicity
                << ", diameter " << em.diameter << ", leonard h = " << lnq::rat_str(em.leonard.h)
                << ", s = " << lnq::rat_str(em.leonard.s) << "\n";
  }
  if (forced == lnq::Suite::kSplits) {
    std::cout << "split level dimensions:\n";
    for (const auto& [tag, dims] : outcome.report.splits.level_dims) {
      std::cout << "  " << tag << ":";
      for (const long d : dims) std::cout << " " << d;
      std::cout << "\n";
    }
  }
  return outcome.exit_code;
}

int run_enumerate(const CommonArgs& args) {
  if (args.n == 0 || args.q == 0)
    throw std::invalid_argument("enumerate requires --n and --q");
  if (args.cache_path.empty())
    throw std::invalid_argument("enumerate requires --cache as the output path");
  const lnq::PrimePower pp = lnq::factor_prime_power(args.q);
  const lnq::SubspacePoset poset(args.n, lnq::FieldCtx(pp.p, pp.k), args.max_vertices);
  lnq::write_poset_cache(args.cache_path, poset);
  std::cout << "wrote " << poset.size() << " vertices to " << args.cache_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for the weighted Q-polynomial structure of L_N(q)"};
  app.require_subcommand(1);

  CommonArgs enum_args, verify_args, decomp_args, split_args;
  CLI::App* cmd_enumerate = app.add_subcommand("enumerate", "enumerate a poset and write the cache");
  add_param_flags(cmd_enumerate, enum_args, false);
  CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
  add_param_flags(cmd_verify, verify_args, true);
  CLI::App* cmd_decompose =
      app.add_subcommand("decompose", "run the module decomposition suite");
  add_param_flags(cmd_decompose, decomp_args, false);
  CLI::App* cmd_splits = app.add_subcommand("splits", "run the split decomposition suite");
  add_param_flags(cmd_splits, split_args, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (cmd_enumerate->parsed()) return run_enumerate(enum_args);
    if (cmd_verify->parsed()) return run_suite_command(verify_args, std::nullopt);
    if (cmd_decompose->parsed()) return run_suite_command(decomp_args, lnq::Suite::kModules);
    if (cmd_splits->parsed()) return run_suite_command(split_args, lnq::Suite::kSplits);
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::runtime_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "verification hard failure: " << e.what() << "\n";
    return 1;
  }
}
