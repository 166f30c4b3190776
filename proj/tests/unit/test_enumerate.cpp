#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "helpers.hpp"

#include "hyperinfect/enumerate.hpp"
#include "hyperinfect/error.hpp"
#include "hyperinfect/families.hpp"

using namespace hyperinfect;

TEST_SUITE("enumerate") {

TEST_CASE("mask conversion") {
  auto h = H(4, {{0, 1}, {1, 2, 3}});
  auto masks = to_masks(h);
  CHECK(masks == EdgeMasks{0b0011, 0b1110});
  CHECK(from_masks(4, masks) == h);
  CHECK(subsets_of_size(4, 2).size() == 6);
  CHECK(subsets_of_size(5, 5) == std::vector<std::uint32_t>{0b11111});
}

TEST_CASE("canonical form ignores labels") {
  Rng rng(7);
  for (int round = 0; round < 50; ++round) {
    auto h = random_hypergraph(rng, 6, 5, 4);
    std::vector<Vertex> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::vector<Vertex>> moved;
    for (const auto& e : h.edges()) {
      std::vector<Vertex> m;
      for (Vertex v : e) m.push_back(perm[v]);
      moved.push_back(m);
    }
    CHECK(canonical_form(6, to_masks(h)) == canonical_form(6, to_masks(H(6, moved))));
  }
  CHECK(canonical_form(3, {0b011}) != canonical_form(3, {0b011, 0b110}));
}

TEST_CASE("connected graph counts") {
  const std::size_t expected[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) CHECK(connected_graphs(n).size() == expected[n - 1]);
  for (const auto& g : connected_graphs(5)) CHECK(edges_connected(g));
  CHECK_THROWS_AS(connected_graphs(8), InvalidInput);
}

TEST_CASE("antichain classes") {
  // monotone Boolean functions up to permutation, minus the two constants
  const std::size_t expected[] = {1, 3, 8, 28, 208};
  for (std::size_t n = 1; n <= 5; ++n) CHECK(antichain_classes(n).size() == expected[n - 1]);
  CHECK_THROWS_AS(antichain_classes(7), InvalidInput);
}

TEST_CASE("3-uniform classes") {
  // unlabelled 3-uniform hypergraphs, empty one included
  const std::size_t expected[] = {1, 2, 5, 34};
  for (std::size_t n = 2; n <= 5; ++n) {
    std::size_t count = 0;
    for_each_class(n, subsets_of_size(n, std::min<std::size_t>(3, n)), [&](const EdgeMasks&) { ++count; });
    if (n >= 3) CHECK(count == expected[n - 2]);
  }
  std::size_t six = 0;
  for_each_class(6, subsets_of_size(6, 3), [&](const EdgeMasks&) { ++six; });
  CHECK(six == 2136);
  CHECK_THROWS_AS(for_each_class(7, subsets_of_size(7, 3), [](const EdgeMasks&) {}), InvalidInput);
}

TEST_CASE("random generators respect their parameters") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    auto u = random_uniform(rng, 7, 3, 4, true);
    CHECK(structure(u).uniform_size == 3);
    CHECK(structure(u).min_degree >= 1);
    auto g = random_graph(rng, 6);
    CHECK(g.vertex_count() == 6);
    for (const auto& e : g.edges()) CHECK(e.size() == 2);
    const auto x = uniform_between(rng, 3, 5);
    CHECK(x >= 3);
    CHECK(x <= 5);
  }
  Rng a(5), b(5);
  CHECK(random_hypergraph(a, 6, 4, 3) == random_hypergraph(b, 6, 4, 3));
}

}
