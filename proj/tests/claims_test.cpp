#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "dp6/claims.hpp"

using namespace dp6;

namespace {

ClaimContext& shared_context() {
  static ClaimContext ctx{RunConfig{}};
  return ctx;
}

const std::vector<std::string> kFast{"C-3.1-ideal", "C-4.4-twist", "C-4.6-dtilde", "C-6-curves", "C-6.1-image"};

}  // namespace

TEST(Registry, IdsAreUniqueAndTagged) {
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.anchor.empty()) << c.id;
    EXPECT_FALSE(c.provenance.empty()) << c.id;
    EXPECT_TRUE(c.expected.is_object() && !c.expected.empty()) << c.id;
    EXPECT_TRUE(c.run) << c.id;
  }
}

TEST(Registry, CoversEveryStatement) {
  const std::vector<std::string> required{
      "C-3.1-ideal",  "C-3.1-gens",   "C-3-dimdeg",   "C-3-smooth",   "C-3.3-contains", "C-3.3-nodes",
      "C-4.1-contains", "C-4.1-nodes", "C-4.1-action", "C-4.3-cokernel", "C-4.3-h21",    "C-4.4-twist",
      "C-4.5-fixed",  "C-4.6-fixed",  "C-4.6-nodes",  "C-4.6-dtilde", "C-5-contains",   "C-5.1-nodes",
      "C-5.2-hodge",  "C-5.3-twist",  "C-5.4-fixed",  "C-6.1-type",   "C-6.1-image",    "C-6.2-type",
      "C-6-curves"};
  std::set<std::string> ids;
  for (const auto& c : claim_registry()) ids.insert(c.id);
  for (const auto& r : required) EXPECT_TRUE(ids.count(r)) << r;
  EXPECT_EQ(ids.size(), required.size());
}

TEST(Report, EmptySelectionSummaryIsZero) {
  auto j = report_json({});
  EXPECT_EQ(j["summary"]["pass"], 0);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["total"], 0);
  EXPECT_TRUE(j["claims"].empty());
  EXPECT_EQ(exit_code({}), 0);
}

TEST(Report, SinglePassingClaim) {
  auto r = run_claims({"C-6-curves"}, shared_context());
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].status, ClaimStatus::Pass);
  auto j = report_json(r);
  EXPECT_EQ(j["summary"]["pass"], 1);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["total"], 1);
  EXPECT_EQ(exit_code(r), 0);
}

TEST(Report, MixedGivesExitCodeOne) {
  auto r = run_claims({"C-4.6-dtilde", "C-6-curves"}, shared_context());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].status, ClaimStatus::Fail);
  EXPECT_EQ(r[1].status, ClaimStatus::Pass);
  EXPECT_EQ(exit_code(r), 1);
  EXPECT_FALSE(r[0].note.empty());
}

TEST(Report, ErrorDominates) {
  std::vector<ClaimReport> r(2);
  r[0].status = ClaimStatus::Fail;
  r[1].status = ClaimStatus::Error;
  EXPECT_EQ(exit_code(r), 2);
  EXPECT_EQ(summarize(r).error, 1u);
}

TEST(Report, JsonFieldOrder) {
  auto j = report_json(run_claims({"C-6-curves"}, shared_context()));
  std::vector<std::string> top, keys;
  for (const auto& [k, v] : j.items()) top.push_back(k);
  EXPECT_EQ(top, (std::vector<std::string>{"claims", "summary"}));
  for (const auto& [k, v] : j["claims"][0].items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "status", "computed", "expected", "provenance", "anchor", "seconds",
                                            "tolerance"}));
  EXPECT_EQ(j["claims"][0]["tolerance"], "default");
}

TEST(Report, TextTable) {
  auto text = report_text(run_claims({"C-4.6-dtilde", "C-6-curves"}, shared_context()));
  std::istringstream is(text);
  std::string header;
  std::getline(is, header);
  EXPECT_EQ(header.rfind("ID", 0), 0u);
  EXPECT_NE(text.find("C-4.6-dtilde    fail"), std::string::npos);
  EXPECT_NE(text.find("expected "), std::string::npos);
  EXPECT_NE(text.find("pass 1  fail 1  error 0  total 2"), std::string::npos);
}

TEST(Run, UnknownIdThrowsBeforeRunning) {
  EXPECT_THROW(run_claims({"C-6-curves", "C-9.9-nothing"}, shared_context()), UnknownClaim);
}

TEST(Run, ReportsFollowRegistryOrder) {
  auto r = run_claims({"C-6-curves", "C-3.1-ideal"}, shared_context());
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].id, "C-3.1-ideal");
  EXPECT_EQ(r[1].id, "C-6-curves");
}

TEST(Run, ReproducibleAcrossRunsAndWorkers) {
  ClaimContext one{RunConfig{}};
  RunConfig cfg;
  cfg.workers = 3;
  ClaimContext three{cfg};
  auto a = report_json(run_claims(kFast, one), false).dump();
  auto b = report_json(run_claims(kFast, one), false).dump();
  auto c = report_json(run_claims(kFast, three), false).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Run, ExpectedValuesAreReported) {
  auto r = run_claims({"C-4.4-twist"}, shared_context());
  EXPECT_EQ(r[0].expected["twist"], "-1");
  EXPECT_EQ(r[0].computed["twist"], "-1");
  EXPECT_EQ(r[0].provenance, claim_registry()[11].provenance);
  EXPECT_EQ(claim_registry()[11].id, "C-4.4-twist");
}

// ------------------------------------------------------------------ CLI

namespace {

int run_cli(const std::string& args, std::string* out = nullptr) {
  const std::string path = ::testing::TempDir() + "verify_out.txt";
  int status = std::system((std::string(VERIFY_BINARY) + " " + args + " > " + path + " 2>&1").c_str());
  if (out) {
    std::ifstream f(path);
    *out = std::string(std::istreambuf_iterator<char>(f), {});
  }
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, PassingClaimExitsZero) {
  std::string out;
  EXPECT_EQ(run_cli("run --claims C-6-curves --report json", &out), 0);
  auto j = Json::parse(out);
  EXPECT_EQ(j["summary"]["pass"], 1);
}

TEST(Cli, FailingClaimExitsOne) { EXPECT_EQ(run_cli("run --claims C-6-curves,C-4.6-dtilde"), 1); }

TEST(Cli, UnknownIdExitsTwo) {
  std::string out;
  EXPECT_EQ(run_cli("run --claims C-0-none", &out), 2);
  EXPECT_NE(out.find("C-0-none"), std::string::npos);
}

TEST(Cli, MalformedConfigExitsTwo) {
  EXPECT_EQ(run_cli("run --tol-profile loose"), 2);
  EXPECT_EQ(run_cli("run --workers 0"), 2);
  EXPECT_EQ(run_cli("run --report xml"), 2);
  EXPECT_EQ(run_cli("frobnicate"), 2);
}

TEST(Cli, StrictProfileIsEchoed) {
  std::string out;
  EXPECT_EQ(run_cli("run --claims C-5.3-twist --tol-profile strict --report json", &out), 0);
  EXPECT_EQ(Json::parse(out)["claims"][0]["tolerance"], "strict");
}

TEST(Cli, ListPrintsEveryClaim) {
  std::string out;
  EXPECT_EQ(run_cli("list", &out), 0);
  for (const auto& c : claim_registry()) EXPECT_NE(out.find(c.id), std::string::npos);
}
