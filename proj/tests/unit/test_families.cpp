#include "doctest.h"
#include "helpers.hpp"

#include "hyperinfect/error.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/oracles.hpp"

using namespace hyperinfect;

TEST_SUITE("families") {

TEST_CASE("complete") {
  auto h = complete(6, 3);
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 20);
  CHECK(I(h) == 4);
  CHECK(I(complete(5, 5)) == 1);
  CHECK(complete(3, 1).edge_count() == 3);
  CHECK_THROWS_AS(complete(3, 4), InvalidInput);
  CHECK_THROWS_AS(complete(3, 0), InvalidInput);
}

TEST_CASE("complete multipartite") {
  auto h = complete_multipartite({2, 3});
  CHECK(h.edge_count() == 6);
  CHECK(h == H(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}));
  CHECK(I(h) == 3);
  auto k222 = complete_multipartite({2, 2, 2});
  CHECK(k222.edge_count() == 8);
  CHECK(I(k222) == flat_infection_number(k222));
}

TEST_CASE("flower") {
  auto h = flower(1, {2, 2, 2});
  CHECK(h.vertex_count() == 7);
  CHECK(h == H(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}}));
  CHECK(I(h) == 2);
  auto big = flower(2, {1, 3, 2, 1});
  CHECK(big.vertex_count() == 9);
  CHECK(I(big) == flat_infection_number(big));
  CHECK_THROWS_AS(flower(1, {2}), InvalidInput);
  CHECK_THROWS_AS(flower(1, {2, 0}), InvalidInput);
}

TEST_CASE("interval") {
  auto h = interval(5, {{1, 3}, {3, 3}});
  CHECK(h == H(5, {{0, 1, 2}, {2, 3, 4}}));
  CHECK(I(h) == 1);
  auto g = interval(6, {{1, 2}, {2, 4}, {5, 2}});
  CHECK(I(g) == flat_infection_number(g));
  CHECK_THROWS_AS(interval(4, {{3, 3}}), InvalidInput);
  CHECK_THROWS_AS(interval(4, {{0, 2}}), InvalidInput);
}

TEST_CASE("hypercycle") {
  auto h = hypercycle({4, 4, 4, 4}, {2, 2, 2, 2});
  CHECK(h.vertex_count() == 8);
  CHECK(h.edge_count() == 4);
  CHECK(I(h) == 2);
  auto c = hypercycle({3, 3, 3}, {1, 1, 1});
  CHECK(c == H(6, {{0, 1, 5}, {1, 2, 3}, {3, 4, 5}}));
  CHECK(I(c) == flat_infection_number(c));
  CHECK_THROWS_AS(hypercycle({3, 3}, {1, 1}), InvalidInput);
  CHECK_THROWS_AS(hypercycle({3, 3, 3}, {1, 1}), InvalidInput);
}

TEST_CASE("tight cycle") {
  auto h = tight_cycle(8, 3, 1);
  CHECK(h == H(8, {{0, 1, 2}, {2, 3, 4}, {4, 5, 6}, {0, 6, 7}}));
  CHECK(I(h) == 1);
  CHECK(tight_cycle(4, 3, 2) == complete(4, 3));
  CHECK(I(tight_cycle(7, 3, 2)) == flat_infection_number(tight_cycle(7, 3, 2)));
  CHECK_THROWS_AS(tight_cycle(7, 3, 1), InvalidInput);
  CHECK_THROWS_AS(tight_cycle(6, 3, 3), InvalidInput);
}

TEST_CASE("augmented complete") {
  auto h = augmented_complete(6, 3);
  CHECK(h.vertex_count() == 6);
  CHECK(h.edge_count() == 10);
  for (const auto& e : h.edges()) CHECK(e.contains(5));
  CHECK(I(h) == flat_infection_number(h));
  CHECK_THROWS_AS(augmented_complete(3, 1), InvalidInput);
}

TEST_CASE("infection one extension") {
  auto e3 = infection_one_extension(H(3, {{0, 1, 2}}));
  CHECK(e3.vertex_count() == 6);
  CHECK(e3.edge_count() == 4);
  CHECK(I(e3) == 1);
  auto e4 = infection_one_extension(H(4, {{0, 1, 2, 3}}));
  CHECK(e4.vertex_count() == 7);
  CHECK(I(e4) == 1);
  auto k = infection_one_extension(complete(5, 3));
  CHECK(structure(k).uniform_size == 3);
  CHECK(I(k) == 1);
  CHECK_THROWS_AS(infection_one_extension(complete(4, 2)), InvalidInput);
  CHECK_THROWS_AS(infection_one_extension(H(4, {{0, 1, 2}, {2, 3}})), InvalidInput);
}

TEST_CASE("trivial") {
  CHECK(trivial(3).is_trivial());
  CHECK(I(trivial(3)) == 3);
  CHECK_THROWS_AS(trivial(0), InvalidInput);
}

TEST_CASE("specs generate the same graphs") {
  CHECK(generate(Complete{5, 3}) == complete(5, 3));
  CHECK(generate(Multipartite{{2, 3}}) == complete_multipartite({2, 3}));
  CHECK(generate(Flower{1, {2, 2}}) == flower(1, {2, 2}));
  CHECK(generate(TightCycle{8, 3, 1}) == tight_cycle(8, 3, 1));
  CHECK(generate(Trivial{2}) == trivial(2));
  CHECK_FALSE(describe(Complete{5, 3}).empty());
  CHECK(describe(Complete{5, 3}) != describe(Complete{5, 2}));
}

}
