#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect {

// Tiny hypergraphs (n <= 8) as sorted lists of edge bitmasks.
using EdgeMasks = std::vector<std::uint32_t>;

Hypergraph from_masks(std::size_t n, const EdgeMasks& edges);
EdgeMasks to_masks(const Hypergraph& h);  // needs n <= 32

/// Isomorphism-invariant form: relabel so vertex degrees are non-increasing,
/// then take the least sorted mask list over all such relabelings.
EdgeMasks canonical_form(std::size_t n, EdgeMasks edges);

/// Calls fn once per isomorphism class of hypergraphs on n vertices whose
/// edges are drawn from `candidates` (at most 24 of them). fn receives the
/// canonical mask list. Classes come in first-seen order over the subsets.
void for_each_class(std::size_t n, const std::vector<std::uint32_t>& candidates,
                    const std::function<void(const EdgeMasks&)>& fn);

/// All k-subsets of n vertices as masks, in lexicographic order.
std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t k);

/// One representative per isomorphism class of nonempty antichains of
/// nonempty subsets of n <= 6 vertices (reduced non-trivial hypergraphs,
/// isolated vertices allowed).
std::vector<EdgeMasks> antichain_classes(std::size_t n);

/// Connected simple graphs on n <= 7 vertices up to isomorphism.
std::vector<Hypergraph> connected_graphs(std::size_t n);

/// Whether the hypergraph (ignoring isolated vertices) has a connected line graph.
bool edges_connected(const Hypergraph& h);

// Seeded generators. Draws use rng() directly so streams are identical on
// every standard library.
using Rng = std::mt19937_64;

std::size_t uniform_below(Rng& rng, std::size_t bound);
std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi);  // inclusive

/// n vertices, up to max_edges edges of size 1..max_edge_size (duplicates merge).
Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t max_edges,
                             std::size_t max_edge_size);
/// k-uniform, `edges` draws; with cover=true every vertex lies in some edge.
Hypergraph random_uniform(Rng& rng, std::size_t n, std::size_t k, std::size_t edges,
                          bool cover = false);
/// G(n, 1/2)-style simple graph.
Hypergraph random_graph(Rng& rng, std::size_t n);
/// Random reduced interval hypergraph on n vertices (natural order).
Hypergraph random_interval(Rng& rng, std::size_t n);

}  // namespace hyperinfect
