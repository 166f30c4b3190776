#include "doctest.h"
#include "helpers.hpp"

#include "hyperinfect/designs.hpp"
#include "hyperinfect/error.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/oracles.hpp"

using namespace hyperinfect;

TEST_SUITE("designs") {

TEST_CASE("primes") {
  CHECK(is_prime(2));
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(4));
  CHECK_FALSE(is_prime(9));
}

TEST_CASE("projective planes and spaces") {
  auto fano = pg_design(2, 2);
  CHECK(fano.vertex_count() == 7);
  CHECK(fano.edge_count() == 7);
  CHECK(is_t_design(fano, 2).lambda == 1);
  auto p23 = pg_design(2, 3);
  CHECK(p23.vertex_count() == 13);
  CHECK(p23.edge_count() == 13);
  CHECK(structure(p23).uniform_size == 4);
  auto p32 = pg_design(3, 2);
  CHECK(p32.vertex_count() == 15);
  CHECK(p32.edge_count() == 35);
  CHECK(is_t_design(p32, 2).is_design);
  auto space = projective_space(2, 3);
  CHECK(space.points.size() == 13);
  CHECK(space.points.front() == std::vector<std::size_t>{0, 0, 1});
  CHECK_THROWS_AS(pg_design(2, 4), InvalidInput);
  CHECK_THROWS_AS(pg_design(1, 2), InvalidInput);
}

TEST_CASE("infection numbers of small designs") {
  CHECK(I(pg_design(2, 2)) == 3);
  CHECK(I(pg_design(2, 3)) == flat_infection_number(pg_design(2, 3), 1, false));
}

TEST_CASE("design check") {
  auto fano = pg_design(2, 2);
  auto f = is_t_design(fano, 2);
  CHECK(f.is_design);
  CHECK(f.lambda == 1);
  CHECK_FALSE(f.witness);
  auto k = is_t_design(complete(5, 3), 2);
  CHECK(k.is_design);
  CHECK(k.lambda == 3);
  CHECK(is_t_design(complete(5, 3), 3).lambda == 1);
  auto fl = is_t_design(flower(1, {2, 2, 2}), 2);
  CHECK_FALSE(fl.is_design);
  REQUIRE(fl.witness);
  CHECK(*fl.witness == VertexSet{1, 3});
  CHECK(fl.witness_multiplicity == 0);
  CHECK_THROWS_AS(is_t_design(H(3, {{0, 1}, {0, 1, 2}}), 2), InvalidInput);
  CHECK_THROWS_AS(is_t_design(fano, 0), InvalidInput);
}

TEST_CASE("block counts") {
  CHECK(design_block_count(7, 3, 2, 0) == 7);
  CHECK(design_block_count(7, 3, 2, 1) == 3);
  CHECK(design_block_count(7, 3, 2, 2) == 1);
  CHECK(design_block_count(8, 4, 3, 0) == 14);
  CHECK(design_block_count(13, 4, 2, 1) == 4);
  CHECK_THROWS_AS(design_block_count(7, 3, 4, 0), InvalidInput);
}

TEST_CASE("derived sub-designs of the Fano plane") {
  auto fano = pg_design(2, 2);
  auto lines = fano.edges();
  auto triv = derived_subdesign_check(fano, VertexSet{0}, 2);
  CHECK(triv.verdict == SubdesignVerdict::Trivial);
  const VertexSet& line = lines.front();
  VertexSet two{line.front(), line.back()};
  auto single = derived_subdesign_check(fano, two, 2);
  CHECK(single.verdict == SubdesignVerdict::SingleEdge);
  CHECK(single.derived == line);
  CHECK(single.induced_edges == 1);
  VertexSet spanning = two;
  for (Vertex v = 0; v < 7; ++v) {
    if (!line.contains(v)) {
      spanning.insert(v);
      break;
    }
  }
  auto whole = derived_subdesign_check(fano, spanning, 2);
  CHECK(whole.verdict == SubdesignVerdict::Design);
  CHECK(whole.derived == fano.vertices());
  CHECK(whole.induced_edges == 7);
  CHECK_THROWS_AS(derived_subdesign_check(complete(5, 3), VertexSet{0}, 2), InvalidInput);
  CHECK(std::string(to_string(SubdesignVerdict::Design)) != to_string(SubdesignVerdict::Violation));
}

}
