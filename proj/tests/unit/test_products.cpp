#include "doctest.h"
#include "helpers.hpp"

#include "hyperinfect/error.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/oracles.hpp"
#include "hyperinfect/products.hpp"

using namespace hyperinfect;

TEST_SUITE("products") {

TEST_CASE("direct product of singleton-edge factors is complete multipartite") {
  auto p = direct_product(complete(2, 1), complete(3, 1));
  CHECK(p.graph == complete_multipartite({2, 3}));
  CHECK(p.raw_edge_count == 6);
  CHECK(p.origin[0] == VertexOrigin{0, 0, 0});
  CHECK(p.origin[4] == VertexOrigin{1, 2, 0});
  auto k333 = direct_product(std::vector<Hypergraph>{complete(3, 1), complete(3, 1), complete(3, 1)});
  CHECK(k333.graph.edge_count() == 27);
  CHECK(I(k333.graph) == 6);
  CHECK_THROWS_AS(direct_product(std::vector<Hypergraph>{}), InvalidInput);
  CHECK_THROWS_AS(direct_product(complete(2, 2), trivial(2)), InvalidInput);
}

TEST_CASE("direct product of two edges") {
  auto p = direct_product(complete(2, 2), H(3, {{0, 1, 2}}));
  CHECK(p.graph == H(5, {{0, 1, 2, 3, 4}}));
}

TEST_CASE("join with a universal vertex") {
  auto j = join_universal_vertex(complete(3, 2));
  CHECK(j.graph == H(4, {{0, 1, 3}, {0, 2, 3}, {1, 2, 3}}));
  CHECK(j.origin[3].factor == 1);
  const auto value = I(j.graph);
  CHECK(value == flat_infection_number(j.graph));
  CHECK(value <= I(complete(3, 2)));
  CHECK_THROWS_AS(join_universal_vertex(trivial(3)), InvalidInput);
}

TEST_CASE("strong join") {
  auto s = strong_join(H(2, {{0, 1}}));
  CHECK(s.graph == H(3, {{0, 1}, {0, 2}, {1, 2}}));
}

TEST_CASE("weak corona") {
  auto tri = weak_corona(complete(3, 2), complete(2, 1));
  CHECK(tri.graph.vertex_count() == 9);
  CHECK(I(tri.graph) == 3);
  CHECK(tri.origin[3] == VertexOrigin{1, 0, 0});
  auto e = weak_corona(complete(3, 3), complete(2, 2));
  CHECK(I(e.graph) == 1);
  auto c5 = weak_corona(cycle_graph(5), complete(1, 1));
  CHECK(c5.graph.vertex_count() == 10);
  CHECK(I(c5.graph) == 3);
  CHECK_THROWS_AS(weak_corona(complete(3, 2), complete(3, 2)), InvalidInput);
}

TEST_CASE("strong corona") {
  auto k2 = strong_corona(complete(2, 2), complete(2, 2));
  CHECK(k2.graph.vertex_count() == 6);
  CHECK(k2.raw_edge_count == 7);
  CHECK(k2.graph.edge_count() == 7);
  CHECK(I(k2.graph) == 3);
  auto k3 = strong_corona(complete(3, 2), complete(2, 2));
  CHECK(I(k3.graph) == 5);
  CHECK_THROWS_AS(strong_corona(complete(3, 2), complete(3, 3)), InvalidInput);
}

TEST_CASE("cartesian product") {
  auto c4 = cartesian_product(complete(2, 2), complete(2, 2));
  CHECK(c4.graph == H(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
  CHECK(I(c4.graph) == 2);
  auto grid = cartesian_product(path_graph(3), path_graph(3));
  CHECK(grid.graph.edge_count() == 12);
  CHECK(I(grid.graph) == 3);
  CHECK(grid.origin[5] == VertexOrigin{0, 1, 2});
  CHECK_THROWS_AS(cartesian_product(trivial(2), complete(2, 2)), InvalidInput);
}

}
