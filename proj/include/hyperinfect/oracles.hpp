#pragma once

#include <cstddef>

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect {

// Slow reference computations that share no code with the solver.

/// Zero forcing number of a simple graph by the color-change rule (a blue
/// vertex with exactly one white neighbour turns it blue), minimizing over
/// all vertex subsets. n <= 20.
std::size_t zero_forcing_oracle(const Hypergraph& graph);

/// Minimum infection-set size by trying every subset in increasing size,
/// with no component split and no bounds. literal=true uses closure_oracle
/// (n <= 16), otherwise the trace closure.
std::size_t flat_infection_number(const Hypergraph& h, int m = 1, bool literal = true);

}  // namespace hyperinfect
