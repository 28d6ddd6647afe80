// Copyright 2026 The cuntzalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "cuntz/corpus.hpp"
#include "cuntz/endo.hpp"
#include "cuntz/parse.hpp"
#include "cuntz/report.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace cuntz;

TEST_CASE("corpus entries parse") {
  const auto e = parse_corpus_entry(
      "# comment\nid: x\nn: 3\nu: P[1] + P[2] + P[3]  # trailing\nexpect.verdict: yes\n", "mem");
  CHECK(e.id == "x");
  CHECK(e.n == 3);
  CHECK(e.unitary == "P[1] + P[2] + P[3]");
  CHECK(e.expect.at("verdict") == "yes");
  CHECK_THROWS_AS(parse_corpus_entry("id: x\n", "mem"), CorpusError);
  CHECK_THROWS_AS(parse_corpus_entry("id: x\nu: I\nbogus: 1\n", "mem"), CorpusError);
  CHECK_THROWS_AS(parse_corpus_entry("id: x\nu: I\nu: I\n", "mem"), CorpusError);
}

TEST_CASE("bundled corpus loads in id order") {
  const auto entries = load_corpus(CUNTZ_CORPUS_DIR);
  REQUIRE(entries.size() == 3);
  CHECK(entries[0].id == "decomposable_o2");
  CHECK(entries[1].id == "nondecomposable_o2");
  CHECK(entries[2].id == "permutative_f2");
  for (const auto& e : entries) CHECK(is_unitary(parse_element(e.unitary, e.n)));
}

TEST_CASE("eval report") {
  const Report r = run_eval(cuntz::testing::kNonDecomposable, 2);
  CHECK(r.command == "eval");
  CHECK(r.passed());
  const nlohmann::json j = to_json(r);
  CHECK(j["schema_version"] == kSchemaVersion);
  CHECK(j["checks"][0]["details"]["degrees"] == nlohmann::json::array({-1, 0, 1}));
  CHECK(j["checks"][3]["details"]["unitary"] == true);
  CHECK_THROWS_AS(run_eval("S[1", 2), ParseError);
}

TEST_CASE("reports round-trip through JSON") {
  Report r;
  r.command = "check";
  r.params = {{"n", 2}, {"K", 5}};
  r.checks.push_back({"a", Status::kPass, {{"x", 1}}});
  r.checks.push_back({"b", Status::kUndetermined, {{"why", "budget"}}});
  r.verdict = nlohmann::json{{"decomposable", "undetermined"}};
  const nlohmann::json j = to_json(r);
  const Report back = report_from_json(nlohmann::json::parse(j.dump()));
  CHECK(to_json(back) == j);
  CHECK(back.checks[1].status == Status::kUndetermined);
  CHECK_FALSE(j.contains("timing"));
  CHECK(r.passed());
  r.checks.push_back({"c", Status::kFail, {}});
  CHECK_FALSE(r.passed());
}

TEST_CASE("check report for the permutative example") {
  const Report r = run_check(cuntz::testing::kPermutativeF2, 2, Budget{});
  CHECK(r.passed());
  REQUIRE(r.verdict.has_value());
  CHECK((*r.verdict)["decomposable"] == "yes");
  CHECK((*r.verdict)["witness"] == "I");
  const nlohmann::json j = to_json(r);
  CHECK(to_json(report_from_json(j)) == j);
  CHECK_THROWS_AS(run_check("S[1]", 2, Budget{}), NotUnitary);
}

TEST_CASE("check stops early when the core is not preserved") {
  const Report r = run_check("S[11]S[2]* + S[2]S[11]* + P[12]", 2, Budget{2, 3, 1});
  CHECK_FALSE(r.passed());
  CHECK((*r.verdict)["decomposable"] == "undetermined");
}

TEST_CASE("empty corpus run is a passing no-op") {
  const Report r = run_corpus({}, Budget{});
  CHECK(r.passed());
  CHECK(r.checks.empty());
}
