#include <set>

#include "doctest.h"
#include "helpers.hpp"

#include "hyperinfect/error.hpp"
#include "hyperinfect/verify.hpp"

using namespace hyperinfect;

namespace {
std::vector<std::string> ids(const std::vector<TheoremCase>& cases) {
  std::vector<std::string> out;
  for (const auto& c : cases) out.push_back(c.id);
  return out;
}
}  // namespace

TEST_SUITE("verify") {

TEST_CASE("registry lists every closed-form result once") {
  const std::vector<std::string> expected = {
      "trivial", "upper-bound", "component-additivity", "zero-forcing-equivalence", "superedge",
      "reduce-invariance", "degree-one-necessity", "complete", "infection-one-extension",
      "augmented-complete", "multipartite", "flower", "degree-two-bound", "linear-degree-two",
      "interval", "hypercycle", "tight-cycle-pair-coverage", "tight-cycle-case-1",
      "tight-cycle-case-2", "tight-cycle-case-3", "tight-cycle-k-plus-one", "symmetric-design",
      "derived-subdesign", "design-corollary", "projective-space", "design-block-count",
      "direct-product-complete", "direct-product-complete-small", "join-example", "join-sandwich",
      "join-characterization", "direct-product-sum-bound", "direct-product-infection-one",
      "weak-corona-bound", "strong-corona-bound", "strong-corona-edge-count", "m-monotone",
      "m-chain", "m-single-edge", "cartesian-bound", "cartesian-corollary", "cartesian-graphs",
      "adjacency-hypergraph", "line-graph-bound", "hypertree-example"};
  const auto& reg = theorem_registry();
  CHECK(reg.size() >= 22);
  CHECK(ids(reg) == expected);
  std::set<std::string> unique;
  for (const auto& c : reg) {
    CHECK(unique.insert(c.id).second);
    CHECK_FALSE(c.tags.empty());
    CHECK_FALSE(c.anchor.empty());
    CHECK_FALSE(c.expected.empty());
    CHECK_FALSE(c.applicability.empty());
    CHECK(c.run);
  }
  for (const auto& c : property_registry()) CHECK(unique.insert(c.id).second);
}

TEST_CASE("filter matches a tag or an id prefix") {
  TheoremCase c{"tight-cycle-case-1", {"family", "tight-cycle"}, "a", "b", "c", {}};
  CHECK(matches(c, ""));
  CHECK(matches(c, "tight-cycle"));
  CHECK(matches(c, "tight-cycle-case"));
  CHECK(matches(c, "family"));
  CHECK_FALSE(matches(c, "fam"));
  CHECK_FALSE(matches(c, "case-1"));
}

TEST_CASE("design cases pass") {
  VerifyOptions o;
  o.filter = "design";
  auto r = run_verification(o);
  REQUIRE(r.cases.size() == 5);
  for (const auto& c : r.cases) {
    INFO(c.id);
    CHECK(c.status == CaseStatus::Pass);
    CHECK(c.checked > 0);
  }
  const auto* pg = r.find("projective-space");
  REQUIRE(pg);
  CHECK(pg->solved > 0);
  CHECK_FALSE(r.find("complete"));
}

TEST_CASE("corona filter selects the two bounds") {
  VerifyOptions o;
  o.filter = "corona";
  auto r = run_verification(o);
  REQUIRE(r.cases.size() == 2);
  CHECK(r.cases[0].id == "weak-corona-bound");
  CHECK(r.cases[1].id == "strong-corona-bound");
  CHECK(r.ok());
  CHECK(r.passed() == 2);
}

TEST_CASE("reports do not depend on the thread count") {
  VerifyOptions one;
  one.filter = "families";
  VerifyOptions four = one;
  four.threads = 4;
  const auto a = report_json(run_verification(one)).dump();
  const auto b = report_json(run_verification(four)).dump();
  CHECK(a == b);
  CHECK(a == report_json(run_verification(one)).dump());
  CHECK(a.find("seconds") == std::string::npos);
  CHECK(report_json(run_verification(one), true).dump().find("seconds") != std::string::npos);
}

TEST_CASE("property suite passes with a small count") {
  auto r = property_suite(0, 40);
  CHECK(r.cases.size() == property_registry().size());
  for (const auto& c : r.cases) {
    INFO(c.id);
    CHECK(c.status == CaseStatus::Pass);
  }
  CHECK(report_json(r).dump() == report_json(property_suite(0, 40)).dump());
}

TEST_CASE("budget exhaustion is reported as skipped") {
  VerifyOptions o;
  o.filter = "flower";
  o.budget = 1;
  auto r = run_verification(o);
  REQUIRE(r.cases.size() == 1);
  CHECK(r.cases[0].status == CaseStatus::Skipped);
  CHECK(r.cases[0].skipped > 0);
  CHECK(r.ok());
}

TEST_CASE("case context bookkeeping") {
  CaseReport rep;
  CaseContext ctx(rep, 1, default_budget(), 10);
  ctx.check_eq("a", 2, 2);
  ctx.check_le("b", 3, 2, nullptr);
  auto h = H(3, {{0, 1, 2}});
  CHECK(ctx.number(h) == 1);
  ctx.instance("c", [&] { throw BudgetExceeded("stop"); });
  CHECK(rep.checked == 2);
  CHECK(rep.failed == 1);
  CHECK(rep.solved == 1);
  CHECK(rep.skipped == 1);
  REQUIRE(rep.failures.size() == 1);
  CHECK(rep.failures[0].instance == "b");
  for (int i = 0; i < 20; ++i) ctx.note("n");
  CHECK(rep.notes.size() == 13);
  CHECK(rep.notes.back() == "further notes omitted");
}

TEST_CASE("conjecture sweep") {
  auto s = conjecture_sweep(5, 3, default_budget());
  CHECK(s.classes == 1 + 4 + 33);
  CHECK(s.counterexamples.empty());
  CHECK(s.holds == s.applicable);
  auto j = sweep_json(s);
  CHECK(j["verdict"] == "holds on sweep");
  CHECK(j == sweep_json(conjecture_sweep(5, 3, default_budget())));
  CHECK_THROWS_AS(conjecture_sweep(7, 3, default_budget()), InvalidInput);
  CHECK_THROWS_AS(conjecture_sweep(8, 2, default_budget()), InvalidInput);
}

}
