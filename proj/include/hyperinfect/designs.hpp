#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect {

/// Points of PG(n, q) with their coordinates, and the lines as edges.
struct ProjectiveSpace {
  std::size_t dimension = 0;
  std::size_t q = 0;
  std::vector<std::vector<std::size_t>> points;  // first nonzero coordinate is 1, lex order
  Hypergraph design;
};

bool is_prime(std::size_t q);

/// PG(n, q) over the prime field Z/q. Needs n >= 2 and q prime.
ProjectiveSpace projective_space(std::size_t n, std::size_t q);
Hypergraph pg_design(std::size_t n, std::size_t q);

struct DesignCheck {
  bool is_design = false;
  std::size_t lambda = 0;           // valid when is_design
  std::optional<VertexSet> witness;  // first t-subset off the common count
  std::size_t witness_multiplicity = 0;
};

/// Whether every t-subset of V(H) lies in the same number of edges.
/// Throws InvalidInput unless H is uniform with at least one edge and
/// 1 <= t <= n.
DesignCheck is_t_design(const Hypergraph& h, std::size_t t);

/// Blocks of a t-(n,k,1) design through a fixed s-set, s <= t.
std::size_t design_block_count(std::size_t n, std::size_t k, std::size_t t, std::size_t s);

enum class SubdesignVerdict { Trivial, SingleEdge, Design, Violation };

struct SubdesignResult {
  SubdesignVerdict verdict = SubdesignVerdict::Violation;
  VertexSet derived;
  std::size_t induced_edges = 0;
};

/// Derives I_W and classifies the induced sub-hypergraph.
/// Throws InvalidInput unless H is a t-(n,k,1) design.
SubdesignResult derived_subdesign_check(const Hypergraph& h, const VertexSet& w, std::size_t t);

const char* to_string(SubdesignVerdict v);

}  // namespace hyperinfect
