#include <cstdlib>

#include "doctest.h"
#include "helpers.hpp"

#include "hyperinfect/error.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/infection.hpp"
#include "hyperinfect/io.hpp"
#include "hyperinfect/oracles.hpp"

using namespace hyperinfect;

namespace {
Hypergraph fano() {
  return H(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}
}  // namespace

TEST_SUITE("solver") {

TEST_CASE("upper bound") {
  CHECK(upper_bound(complete(5, 3)) == 3);
  CHECK(upper_bound(complete(5, 3), 2) == 4);
  CHECK(upper_bound(trivial(4)) == 4);
  CHECK(upper_bound(H(4, {{0, 1}, {2, 3}})) == 3);
}

TEST_CASE("multiplicity lower bound") {
  CHECK(multiplicity_lower_bound(complete(5, 3)) == 3);
  CHECK(multiplicity_lower_bound(fano()) == 2);
  CHECK(multiplicity_lower_bound(H(3, {{0, 1, 2}})) == 1);
  CHECK(multiplicity_lower_bound(trivial(3)) == 3);
}

TEST_CASE("known infection numbers") {
  CHECK(I(complete(5, 3)) == 3);
  CHECK(I(fano()) == 3);
  CHECK(I(io::load(std::string(FIXTURE_DIR) + "/hypertree.hg")) == 3);
  CHECK(I(H(3, {{0, 1, 2}})) == 1);
  CHECK(I(H(3, {{0, 1, 2}}), 2) == 2);
  CHECK(I(complete_multipartite({2, 3})) == 3);
  CHECK(I(trivial(5)) == 5);
  CHECK(I(disjoint_union(complete(5, 3), fano())) == 6);
}

TEST_CASE("witness is the lexicographically least minimum set") {
  auto r = infection_number(complete(4, 2));
  CHECK(r.infection_number == 3);
  CHECK(r.witness == VertexSet{0, 1, 2});
  CHECK(r.trace.seed == r.witness);
  CHECK(r.trace.final == complete(4, 2).vertices());
  CHECK_FALSE(validate_trace(complete(4, 2), r.trace));
  auto p = infection_number(path_graph(4));
  CHECK(p.witness == VertexSet{0});
}

TEST_CASE("solver matches the flat oracle on small graphs") {
  for (int m = 1; m <= 3; ++m) {
    CHECK(I(fano(), m) == flat_infection_number(fano(), m));
    CHECK(I(complete(6, 3), m) == flat_infection_number(complete(6, 3), m));
  }
}

TEST_CASE("zero forcing") {
  CHECK(zero_forcing_number(path_graph(4)).infection_number == 1);
  CHECK(zero_forcing_number(cycle_graph(5)).infection_number == 2);
  CHECK(zero_forcing_number(complete(4, 2)).infection_number == 3);
  CHECK(zero_forcing_oracle(cycle_graph(5)) == 2);
  CHECK_THROWS_AS(zero_forcing_number(complete(4, 3)), InvalidInput);
}

TEST_CASE("threads give the same answer") {
  SolverOptions one, four;
  four.threads = 4;
  auto h = complete(9, 4);
  auto a = infection_number(h, one);
  auto b = infection_number(h, four);
  CHECK(a.infection_number == b.infection_number);
  CHECK(a.witness == b.witness);
  CHECK(a.trace == b.trace);
}

TEST_CASE("budget") {
  SolverOptions o;
  o.budget = 1;
  CHECK_THROWS_AS(infection_number(complete(10, 5), o), BudgetExceeded);
  o.m = 0;
  CHECK_THROWS_AS(infection_number(complete(4, 2), o), InvalidInput);

  setenv("HYPERINFECT_BUDGET", "12345", 1);
  CHECK(default_budget() == 12345);
  setenv("HYPERINFECT_BUDGET", "lots", 1);
  CHECK_THROWS_AS(default_budget(), InvalidInput);
  setenv("HYPERINFECT_BUDGET", "0", 1);
  CHECK_THROWS_AS(default_budget(), InvalidInput);
  unsetenv("HYPERINFECT_BUDGET");
  CHECK(default_budget() == (std::uint64_t{1} << 24));
}

TEST_CASE("result json") {
  auto h = complete(5, 3);
  auto j = result_json(h, infection_number(h), true);
  CHECK(j["infection_number"] == 3);
  CHECK(j["witness"] == nlohmann::json::array({1, 2, 3}));
  CHECK(j.contains("trace"));
  CHECK_FALSE(result_json(h, infection_number(h)).contains("trace"));
}

TEST_CASE("conjecture check") {
  auto r = check_conjecture(complete(5, 3));
  CHECK(r.status == ConjectureStatus::Holds);
  CHECK(r.infection_number == 3);
  CHECK(std::string(to_string(r.status)) == "holds");

  auto mp = check_conjecture(complete_multipartite({2, 2}));
  CHECK(mp.infection_number == 2);
  CHECK(mp.status == ConjectureStatus::NotApplicable);

  // 4-uniform on 6 vertices with I = 3 = n - k + 1. The infection set {0,1,5}
  // leaves {2,3,4}, which lies in no edge.
  auto ce = H(6, {{0, 1, 2, 3}, {0, 1, 2, 4}, {0, 1, 2, 5}, {0, 1, 3, 4},
                  {0, 2, 3, 5}, {0, 3, 4, 5}, {1, 2, 4, 5}});
  CHECK(I(ce) == 3);
  CHECK(is_infection_set(ce, VertexSet{0, 1, 5}));
  auto v = check_conjecture(ce);
  CHECK(v.status == ConjectureStatus::Violated);
  REQUIRE(v.counterexample_seed);
  CHECK(v.counterexample_seed->size() == 3);
  CHECK(is_infection_set(ce, *v.counterexample_seed));
  CHECK(*v.counterexample_uninfected == (ce.vertices() -= *v.counterexample_seed));
  for (const auto& e : ce.edges()) CHECK_FALSE(v.counterexample_uninfected->is_subset_of(e));
  CHECK_THROWS_AS(check_conjecture(H(4, {{0, 1, 2}, {2, 3}})), InvalidInput);
  CHECK_THROWS_AS(check_conjecture(trivial(3)), InvalidInput);
}

}
