#pragma once

// Registry of checkable statements about the threefolds, each with an
// expected value, a comparator and a recipe built from the library modules.

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "dp6/hodge.hpp"
#include "dp6/numsolve.hpp"
#include "dp6/symmetry.hpp"

namespace dp6 {

using Json = nlohmann::ordered_json;

Json to_json(const CPoint& p);
Json to_json(const SolutionSet& s);

struct RunConfig {
  Tolerances tol;
  std::string tol_profile = "default";
  std::uint64_t seed = 1;  ///< random combination of the multiplication matrices
  std::vector<std::uint64_t> samples{1, 2, 3};  ///< family samples checked for the 36-node statement
  int workers = 1;
  GroebnerCache cache;
};

/// Expensive intermediate results shared between claims, computed once.
class ClaimContext {
 public:
  explicit ClaimContext(RunConfig cfg);
  ~ClaimContext();
  ClaimContext(const ClaimContext&) = delete;
  ClaimContext& operator=(const ClaimContext&) = delete;

  const RunConfig& config() const { return cfg_; }
  SolveOptions solve_options() const;

  const GroebnerBasis& dtilde();
  const SolutionSet& nodes_yprime();
  const SolutionSet& nodes_ydoubleprime();
  const SolutionSet& nodes_sample(std::uint64_t seed);
  const FixedLocus& fixed(const std::string& which);  ///< "sigma", "tau", "rho"

 private:
  struct Memo;
  RunConfig cfg_;
  std::unique_ptr<Memo> memo_;
};

struct ClaimOutcome {
  bool pass = false;
  Json computed;
  std::string note;
};

struct Claim {
  std::string id;
  std::string anchor;      ///< statement and quote, from data/claims.txt
  std::string provenance;
  Json expected;
  std::function<ClaimOutcome(ClaimContext&)> run;
};

enum class ClaimStatus { Pass, Fail, Error, Skipped };
std::string to_string(ClaimStatus s);

struct ClaimReport {
  std::string id;
  ClaimStatus status = ClaimStatus::Skipped;
  Json computed;
  Json expected;
  std::string provenance;
  std::string anchor;
  double seconds = 0;
  std::string tolerance;
  std::string note;
};

const std::vector<Claim>& claim_registry();

class UnknownClaim : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Empty selection means every claim.  Reports come back in registry order.
/// Throws UnknownClaim before running anything.
std::vector<ClaimReport> run_claims(const std::vector<std::string>& selection, ClaimContext& ctx);

struct Summary {
  std::size_t pass = 0, fail = 0, error = 0, skipped = 0, total = 0;
};
Summary summarize(const std::vector<ClaimReport>& reports);

Json report_json(const std::vector<ClaimReport>& reports, bool with_timing = true);
std::string report_text(const std::vector<ClaimReport>& reports);

/// 0 when everything passed, 2 when a claim errored, 1 otherwise.
int exit_code(const std::vector<ClaimReport>& reports);

}  // namespace dp6
