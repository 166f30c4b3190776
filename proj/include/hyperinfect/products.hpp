#pragma once

#include <cstddef>
#include <vector>

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect {

/// Where a product vertex came from.
///   direct product: factor = factor position, vertex = its index there
///   join / strong join: factor 0 = H, factor 1 = the added vertex
///   coronas: factor 0 = G vertex, factor 1 + g = the copy of H hung on g
///   Cartesian: factor 0, vertex = g, second = h
struct VertexOrigin {
  std::size_t factor = 0;
  Vertex vertex = 0;
  Vertex second = 0;

  bool operator==(const VertexOrigin&) const = default;
};

struct ProductResult {
  Hypergraph graph;
  std::vector<VertexOrigin> origin;  // indexed by result vertex
  std::size_t raw_edge_count = 0;    // edges generated before deduplication
};

/// Disjoint factors, one edge E_1 ∪ ... ∪ E_l per choice of factor edges.
/// Every factor needs at least one edge.
ProductResult direct_product(const std::vector<Hypergraph>& factors);
ProductResult direct_product(const Hypergraph& a, const Hypergraph& b);

/// Adds one new vertex (label n) to every edge. Needs a non-trivial H.
ProductResult join_universal_vertex(const Hypergraph& h);

/// G k-uniform, H (k-1)-uniform, both with edges. Vertices: G first, then
/// the copy of H for g at |V(G)| + g|V(H)|.
ProductResult weak_corona(const Hypergraph& g, const Hypergraph& h);

/// H k-uniform: its edges plus F ∪ {v} for every (k-1)-subset F of an edge,
/// v being the new vertex n.
ProductResult strong_join(const Hypergraph& h);

/// G, H both k-uniform. Same vertex layout as weak_corona; each copy of H
/// carries its edges and its strong join with g.
ProductResult strong_corona(const Hypergraph& g, const Hypergraph& h);

/// Pair (g, h) becomes g|V(H)| + h. Both factors need an edge.
ProductResult cartesian_product(const Hypergraph& g, const Hypergraph& h);

}  // namespace hyperinfect
