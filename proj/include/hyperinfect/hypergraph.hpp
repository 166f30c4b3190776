#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hyperinfect/vertex_set.hpp"

namespace hyperinfect {

/// A finite hypergraph on vertices {0, ..., n-1}.
///
/// Edges are nonempty, duplicate-free, and stored in canonical order: by size,
/// then lexicographically. Isolated vertices are allowed. Instances are
/// immutable once built.
class Hypergraph {
 public:
  /// Throws InvalidInput for n == 0, an empty edge, or an out-of-range vertex.
  static Hypergraph build(std::size_t n, const std::vector<std::vector<Vertex>>& edge_lists);
  static Hypergraph build(std::size_t n, std::vector<VertexSet> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(std::size_t i) const { return edges_.at(i); }
  bool is_trivial() const { return edges_.empty(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  /// Edge lists as 0-based vertex vectors (canonical order).
  std::vector<std::vector<Vertex>> edge_lists() const;

  bool operator==(const Hypergraph&) const = default;

 private:
  Hypergraph(std::size_t n, std::vector<VertexSet> edges) : n_(n), edges_(std::move(edges)) {}

  std::size_t n_ = 0;
  std::vector<VertexSet> edges_;
};

struct StructureReport {
  std::optional<std::size_t> uniform_size;  // k when every edge has size k
  std::size_t max_edge_size = 0;
  std::size_t min_edge_size = 0;
  bool is_linear = true;
  bool is_reduced = true;
  bool has_singleton_edges = false;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
};

StructureReport structure(const Hypergraph& h);

/// Number of edges containing `subset`. Throws for an empty or out-of-range set.
std::size_t degree(const Hypergraph& h, const VertexSet& subset);
std::size_t degree(const Hypergraph& h, Vertex v);

/// Removes every edge that is a proper subset of another edge.
Hypergraph reduce(const Hypergraph& h);

/// A sub-hypergraph with its vertices relabeled 0..m-1. `labels[i]` is the
/// vertex of the parent that became vertex i.
struct Relabeled {
  Hypergraph graph;
  std::vector<Vertex> labels;

  VertexSet lift(const VertexSet& local) const;
};

/// Connected components, ordered by smallest vertex. Two vertices share a
/// component iff a chain of intersecting edges joins them; isolated vertices
/// come back as one-vertex trivial components.
std::vector<Relabeled> components(const Hypergraph& h);

/// Sub-hypergraph induced by `subset`: edges of h lying entirely inside it.
Relabeled induced(const Hypergraph& h, const VertexSet& subset);

/// Graph (2-uniform hypergraph) on the edges of h, vertex i = canonical edge i,
/// adjacent iff the edges intersect. Throws for a trivial hypergraph.
Hypergraph line_graph(const Hypergraph& h);

/// Inverse of line_graph for simple graphs: one vertex per graph edge and one
/// hyperedge per graph vertex (its incident edges). Degree-1 graph vertices
/// give singleton hyperedges, which are kept.
Hypergraph adjacency_hypergraph(const Hypergraph& graph);

/// Vertex-disjoint union; the second operand is shifted by a.vertex_count().
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperinfect
