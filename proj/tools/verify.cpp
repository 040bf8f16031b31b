// verify run [--claims id,id] [--report json|text] [--tol-profile strict|default]
//            [--seed N] [--workers K] [--cache DIR]
// verify properties
// verify list

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "dp6/claims.hpp"
#include "dp6/properties.hpp"

namespace {

int run(const std::vector<std::string>& ids, const std::string& format, const std::string& profile,
        std::uint64_t seed, int workers, const std::string& cache_dir) {
  dp6::RunConfig cfg;
  cfg.tol = profile == "strict" ? dp6::Tolerances::strict() : dp6::Tolerances::defaults();
  cfg.tol_profile = profile;
  cfg.seed = seed;
  cfg.workers = workers;
  cfg.cache = cache_dir.empty() ? dp6::GroebnerCache::from_env() : dp6::GroebnerCache(cache_dir);

  dp6::ClaimContext ctx(cfg);
  std::vector<dp6::ClaimReport> reports;
  try {
    reports = dp6::run_claims(ids, ctx);
  } catch (const dp6::UnknownClaim& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
  if (format == "json")
    std::cout << dp6::report_json(reports).dump(2) << "\n";
  else
    std::cout << dp6::report_text(reports);
  return dp6::exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks the computable statements about the threefolds Y' and Y''"};
  app.require_subcommand(1);

  std::vector<std::string> ids;
  std::string format = "text", profile = "default", cache_dir;
  std::uint64_t seed = 1;
  int workers = 1;

  auto* run_cmd = app.add_subcommand("run", "run claims and print a report");
  run_cmd->add_option("--claims", ids, "claim ids (default: all)")->delimiter(',');
  run_cmd->add_option("--report", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  run_cmd->add_option("--tol-profile", profile, "strict or default")->check(CLI::IsMember({"strict", "default"}));
  run_cmd->add_option("--seed", seed, "seed for the random combination of multiplication matrices");
  run_cmd->add_option("--workers", workers, "claims run concurrently")->check(CLI::Range(1, 256));
  run_cmd->add_option("--cache", cache_dir, "Groebner basis cache directory (default: $CYVERIFY_CACHE)");

  auto* list_cmd = app.add_subcommand("list", "print the claim ids and anchors");
  auto* props_cmd = app.add_subcommand("properties", "run the randomized property suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*list_cmd) {
    for (const auto& c : dp6::claim_registry()) std::cout << c.id << "\t" << c.provenance << "\t" << c.anchor << "\n";
    return 0;
  }
  if (*props_cmd) {
    int code = 0;
    for (const auto& r : dp6::run_properties()) {
      std::cout << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases): " << r.detail << "\n";
      if (!r.pass) code = 1;
    }
    return code;
  }
  try {
    return run(ids, format, profile, seed, workers, cache_dir);
  } catch (const std::exception& e) {
    std::cerr << "verify: " << e.what() << "\n";
    return 2;
  }
}
