#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect {

// Every generator throws InvalidInput on a parameter violation.
// Vertex numbering is fixed so generated files are byte-stable.

/// All k-subsets of n vertices. 1 <= k <= n.
Hypergraph complete(std::size_t n, std::size_t k);

/// Parts are consecutive label blocks; one edge per choice of one vertex from
/// each part.
Hypergraph complete_multipartite(const std::vector<std::size_t>& parts);

/// Core vertices come first, then each petal's private block in order.
/// Needs at least two petals, every extra size >= 1.
Hypergraph flower(std::size_t core_size, const std::vector<std::size_t>& petal_extra_sizes);

/// Intervals are (start, length) with 1-based start.
Hypergraph interval(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& intervals);

/// Cycle of c >= 3 edges. overlap_sizes[i] is |E_i ∩ E_{i+1 mod c}|.
/// Layout: private part of E_0, overlap O_0, private part of E_1, O_1, ...
/// so E_i = O_{i-1} ∪ P_i ∪ O_i.
Hypergraph hypercycle(const std::vector<std::size_t>& edge_sizes,
                      const std::vector<std::size_t>& overlap_sizes);

/// Arcs of length k starting at 0, k-t, 2(k-t), ... around n cyclic vertices.
/// 1 <= t < k <= n and (k - t) divides n.
Hypergraph tight_cycle(std::size_t n, std::size_t k, std::size_t t);

/// Every (k-1)-subset of the first n-1 vertices plus the last vertex.
/// 2 <= k <= n.
Hypergraph augmented_complete(std::size_t n, std::size_t k);

/// k-uniform supergraph with infection number 1, built by layered covers:
/// each layer is cut into ceil(L/(k-1)) consecutive blocks of size k-1, each
/// block gets one fresh vertex, and the fresh vertices form the next layer.
/// A short last block is padded with the lowest labels of its own layer, or
/// with the lowest labels overall when the layer has fewer than k-1 vertices.
/// Needs a k-uniform H with k >= 3 (for k = 2 the layers never shrink).
Hypergraph infection_one_extension(const Hypergraph& h);

/// n vertices, no edges.
Hypergraph trivial(std::size_t n);

struct Complete {
  std::size_t n = 0, k = 0;
};
struct Multipartite {
  std::vector<std::size_t> parts;
};
struct Flower {
  std::size_t core_size = 0;
  std::vector<std::size_t> petal_extra_sizes;
};
struct Interval {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> intervals;
};
struct Hypercycle {
  std::vector<std::size_t> edge_sizes;
  std::vector<std::size_t> overlap_sizes;
};
struct TightCycle {
  std::size_t n = 0, k = 0, t = 0;
};
struct AugmentedComplete {
  std::size_t n = 0, k = 0;
};
struct Trivial {
  std::size_t n = 0;
};

using FamilySpec = std::variant<Complete, Multipartite, Flower, Interval, Hypercycle, TightCycle,
                                AugmentedComplete, Trivial>;

Hypergraph generate(const FamilySpec& spec);
/// Short human-readable form, e.g. "complete(5,3)".
std::string describe(const FamilySpec& spec);

}  // namespace hyperinfect
