#pragma once

#include <string>
#include <vector>

#include "hyperinfect/hypergraph.hpp"
#include "hyperinfect/solver.hpp"

// 0-based edge lists, as in the code
inline hyperinfect::Hypergraph H(std::size_t n, const std::vector<std::vector<hyperinfect::Vertex>>& edges) {
  return hyperinfect::Hypergraph::build(n, edges);
}

inline std::size_t I(const hyperinfect::Hypergraph& h, int m = 1) {
  hyperinfect::SolverOptions o;
  o.m = m;
  return hyperinfect::infection_number(h, o).infection_number;
}

inline hyperinfect::Hypergraph path_graph(std::size_t n) {
  std::vector<std::vector<hyperinfect::Vertex>> e;
  for (hyperinfect::Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return H(n, e);
}

inline hyperinfect::Hypergraph cycle_graph(std::size_t n) {
  std::vector<std::vector<hyperinfect::Vertex>> e;
  for (hyperinfect::Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<hyperinfect::Vertex>((i + 1) % n)});
  return H(n, e);
}
