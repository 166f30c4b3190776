#include "doctest.h"
#include "helpers.hpp"

#include "hyperinfect/error.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/infection.hpp"
#include "hyperinfect/io.hpp"

using namespace hyperinfect;

TEST_SUITE("infection") {

TEST_CASE("single rule application") {
  auto h = H(4, {{0, 1, 2}, {0, 3}});
  REQUIRE(h.edge(0) == VertexSet{0, 3});
  REQUIRE(h.edge(1) == VertexSet{0, 1, 2});
  // {1} only lies in {0,1,2}
  CHECK(can_infect(h, VertexSet{1}, VertexSet{1}, 1));
  // {0} also lies in {0,3}, which is not covered yet
  CHECK_FALSE(can_infect(h, VertexSet{0}, VertexSet{0}, 1));
  CHECK(can_infect(h, VertexSet{0, 3}, VertexSet{0}, 1));
  // witness must be infected and inside the edge
  CHECK_FALSE(can_infect(h, VertexSet{}, VertexSet{1}, 1));
  CHECK_FALSE(can_infect(h, VertexSet{1, 3}, VertexSet{1, 3}, 1));
  CHECK_FALSE(can_infect(h, VertexSet{1}, VertexSet{}, 1));
  CHECK_THROWS_AS(can_infect(h, VertexSet{1}, VertexSet{1}, 2), InvalidInput);
  CHECK_THROWS_AS(can_infect(h, VertexSet{1}, VertexSet{1}, 0, 0), InvalidInput);
}

TEST_CASE("m-rule needs m infected witness vertices") {
  auto e = H(3, {{0, 1, 2}});
  CHECK(can_infect(e, VertexSet{0}, VertexSet{0}, 0, 1));
  CHECK_FALSE(can_infect(e, VertexSet{0}, VertexSet{0}, 0, 2));
  CHECK(can_infect(e, VertexSet{0, 1}, VertexSet{0, 1}, 0, 2));
}

TEST_CASE("flower closure from two petal vertices") {
  auto h = flower(1, {2, 2, 2});
  auto t = closure(h, VertexSet{1, 3});
  CHECK(t.final == h.vertices());
  REQUIRE(t.events.size() == 3);
  CHECK(t.events[0].witness == VertexSet{1});
  CHECK(t.events[0].newly_infected == VertexSet{0, 2});
  CHECK(t.events[1].witness == VertexSet{0, 3});
  CHECK(t.events[2].witness == VertexSet{0});
  CHECK_FALSE(validate_trace(h, t));
  // one petal vertex only reaches its own petal
  CHECK(derived_set(h, VertexSet{1}) == VertexSet{0, 1, 2});
}

TEST_CASE("closure agrees with the literal fixpoint") {
  auto k43 = complete(4, 3);
  CHECK(closure(k43, VertexSet{0, 1}).final == k43.vertices());
  CHECK(closure_oracle(k43, VertexSet{0, 1}) == k43.vertices());
  CHECK(derived_set(k43, VertexSet{0}) == VertexSet{0});
  CHECK(closure_oracle(k43, VertexSet{0}) == VertexSet{0});
  auto k53 = complete(5, 3);
  CHECK(derived_set(k53, VertexSet{0, 1}) == VertexSet{0, 1});
  CHECK(derived_set(k53, VertexSet{0, 1, 2}) == k53.vertices());
  CHECK(derived_set(complete(5, 3), VertexSet{}) == VertexSet{});
  CHECK(closure(trivial(4), VertexSet{0}).final == VertexSet{0});
}

TEST_CASE("infection sets of the hypertree fixture") {
  auto h = io::load(std::string(FIXTURE_DIR) + "/hypertree.hg");
  CHECK(is_infection_set(h, VertexSet{0, 1, 2}));
  CHECK_FALSE(is_infection_set(h, VertexSet{0, 1}));
  CHECK_FALSE(is_infection_set(h, VertexSet{4, 5}));
  CHECK(is_infection_set(h, h.vertices()));
}

TEST_CASE("seed validation") {
  CHECK_THROWS_AS(closure(complete(3, 2), VertexSet{3}), InvalidInput);
  CHECK_THROWS_AS(derived_set(complete(3, 2), VertexSet{0}, 0), InvalidInput);
  CHECK_THROWS_AS(closure_oracle(complete(17, 16), VertexSet{0}), InvalidInput);
}

TEST_CASE("trace validation catches tampering") {
  auto h = flower(1, {2, 2, 2});
  auto t = closure(h, VertexSet{1, 3});
  auto swapped = t;
  std::swap(swapped.events[1], swapped.events[2]);
  CHECK(validate_trace(h, swapped));
  auto wrong_final = t;
  wrong_final.final.erase(6);
  CHECK(validate_trace(h, wrong_final));
  auto short_seed = t;
  short_seed.seed = VertexSet{1};
  CHECK(validate_trace(h, short_seed));
}

TEST_CASE("trace json round trip") {
  auto h = flower(1, {2, 2, 2});
  auto t = closure(h, VertexSet{1, 3});
  auto j = trace_json(h, t);
  CHECK(j["seed"] == nlohmann::json::array({2, 4}));
  CHECK(j["events"][0]["edge_index"] == 1);
  CHECK(trace_from_json(j) == t);
  CHECK_THROWS_AS(trace_from_json(nlohmann::json::parse("{\"seed\": [0]}")), InvalidInput);
}

}
