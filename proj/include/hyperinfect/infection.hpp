#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect {

/// One firing of the rule: `witness` (infected, inside the edge) infects edge
/// `edge_index`, turning `newly_infected` infected.
struct InfectionEvent {
  VertexSet witness;
  std::size_t edge_index = 0;
  VertexSet newly_infected;

  bool operator==(const InfectionEvent&) const = default;
};

struct InfectionTrace {
  VertexSet seed;
  std::vector<InfectionEvent> events;
  VertexSet final;

  bool operator==(const InfectionTrace&) const = default;
};

/// The (m-)infection rule for a single candidate witness.
/// Throws InvalidInput for an out-of-range edge index or m == 0.
bool can_infect(const Hypergraph& h, const VertexSet& infected, const VertexSet& witness,
                std::size_t edge_index, int m = 1);

/// Derived set of `seed` with a replayable trace. Each sweep scans edges in
/// canonical order and fires with the maximal witness infected ∩ E.
InfectionTrace closure(const Hypergraph& h, const VertexSet& seed, int m = 1);

/// Literal fixpoint trying every nonempty infected subset against every edge.
/// Exponential; throws InvalidInput above 16 vertices.
VertexSet closure_oracle(const Hypergraph& h, const VertexSet& seed, int m = 1);

/// Final derived set only, via the bitmask engine.
VertexSet derived_set(const Hypergraph& h, const VertexSet& seed, int m = 1);

bool is_infection_set(const Hypergraph& h, const VertexSet& seed, int m = 1);

/// Replays `trace` from its seed. Returns nullopt when every event is legal at
/// its position and `final` matches, otherwise a description of the first
/// problem.
std::optional<std::string> validate_trace(const Hypergraph& h, const InfectionTrace& trace,
                                          int m = 1);

/// 1-based JSON: {"seed", "events": [{"witness", "edge", "edge_index", "infected"}], "final"}.
/// Edge indices in JSON are 1-based positions in the canonical edge list.
nlohmann::json trace_json(const Hypergraph& h, const InfectionTrace& trace);
InfectionTrace trace_from_json(const nlohmann::json& j);

}  // namespace hyperinfect
