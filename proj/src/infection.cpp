#include "hyperinfect/infection.hpp"

#include <bit>
#include <cstdint>

#include "engine.hpp"
#include "hyperinfect/error.hpp"
#include "hyperinfect/io.hpp"

namespace hyperinfect {
namespace {

void check_m(int m) {
  if (m < 1) throw InvalidInput("m must be at least 1");
}

void check_seed(const Hypergraph& h, const VertexSet& seed) {
  if (!seed.empty() && seed.back() >= h.vertex_count()) {
    throw InvalidInput("seed vertex " + std::to_string(seed.back() + 1) + " outside 1.." +
                       std::to_string(h.vertex_count()));
  }
}

// Rule check without argument validation. Only edges through the witness can
// hold an outside uninfected vertex together with it.
bool fires(const Hypergraph& h, const VertexSet& infected, const VertexSet& witness,
           const VertexSet& e, int m) {
  if (witness.empty() || witness.size() < static_cast<std::size_t>(m)) return false;
  if (!witness.is_subset_of(e) || !witness.is_subset_of(infected)) return false;
  const VertexSet covered = e | infected;
  for (const auto& f : h.edges()) {
    if (witness.is_subset_of(f) && !f.is_subset_of(covered)) return false;
  }
  return true;
}

VertexSet from_labels(const nlohmann::json& arr) {
  VertexSet s;
  for (const auto& label : arr) {
    const auto v = label.get<long long>();
    if (v < 1) throw InvalidInput("vertex labels are 1-based");
    s.insert(static_cast<Vertex>(v - 1));
  }
  return s;
}

}  // namespace

bool can_infect(const Hypergraph& h, const VertexSet& infected, const VertexSet& witness,
                std::size_t edge_index, int m) {
  check_m(m);
  if (edge_index >= h.edge_count()) {
    throw InvalidInput("edge index " + std::to_string(edge_index) + " out of range");
  }
  return fires(h, infected, witness, h.edge(edge_index), m);
}

InfectionTrace closure(const Hypergraph& h, const VertexSet& seed, int m) {
  check_m(m);
  check_seed(h, seed);
  InfectionTrace trace;
  trace.seed = seed;
  VertexSet infected = seed;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      const VertexSet& e = h.edge(i);
      if (e.is_subset_of(infected)) continue;
      VertexSet witness = e & infected;
      if (!fires(h, infected, witness, e, m)) continue;
      VertexSet fresh = e - infected;
      infected |= e;
      trace.events.push_back({std::move(witness), i, std::move(fresh)});
      changed = true;
    }
  }
  trace.final = std::move(infected);
  return trace;
}

VertexSet closure_oracle(const Hypergraph& h, const VertexSet& seed, int m) {
  check_m(m);
  check_seed(h, seed);
  const std::size_t n = h.vertex_count();
  if (n > 16) throw InvalidInput("closure_oracle is limited to 16 vertices");
  std::vector<std::uint32_t> edges;
  for (const auto& e : h.edges()) {
    std::uint32_t mask = 0;
    for (Vertex v : e) mask |= 1U << v;
    edges.push_back(mask);
  }
  std::uint32_t infected = 0;
  for (Vertex v : seed) infected |= 1U << v;
  const std::uint32_t all = (1U << n) - 1;
  bool changed = true;
  while (changed) {
    changed = false;
    // Every nonempty A ⊆ infected, every edge E ⊇ A, every uninfected v ∉ E.
    for (std::uint32_t a = infected; a != 0 && !changed; a = (a - 1) & infected) {
      if (std::popcount(a) < m) continue;
      for (std::uint32_t e : edges) {
        if ((a & ~e) != 0 || (e & ~infected) == 0) continue;
        bool blocked = false;
        const std::uint32_t outside = all & ~infected & ~e;
        for (Vertex v = 0; v < n && !blocked; ++v) {
          if (((outside >> v) & 1U) == 0) continue;
          const std::uint32_t av = a | (1U << v);
          for (std::uint32_t f : edges) {
            if ((av & ~f) == 0) {
              blocked = true;
              break;
            }
          }
        }
        if (!blocked) {
          infected |= e;
          changed = true;
          break;
        }
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if ((infected >> v) & 1U) out.insert(v);
  }
  return out;
}

VertexSet derived_set(const Hypergraph& h, const VertexSet& seed, int m) {
  check_m(m);
  check_seed(h, seed);
  return detail::with_engine(h, [&](const auto& engine) {
    using Mask = typename std::decay_t<decltype(engine)>::Mask;
    return engine.closure(Mask::from(seed), m).to_set();
  });
}

bool is_infection_set(const Hypergraph& h, const VertexSet& seed, int m) {
  return derived_set(h, seed, m).size() == h.vertex_count();
}

std::optional<std::string> validate_trace(const Hypergraph& h, const InfectionTrace& trace,
                                          int m) {
  check_m(m);
  if (!trace.seed.empty() && trace.seed.back() >= h.vertex_count()) {
    return "seed has a vertex out of range";
  }
  VertexSet infected = trace.seed;
  for (std::size_t i = 0; i < trace.events.size(); ++i) {
    const auto& ev = trace.events[i];
    const std::string where = "event " + std::to_string(i + 1) + ": ";
    if (ev.edge_index >= h.edge_count()) return where + "edge index out of range";
    const VertexSet& e = h.edge(ev.edge_index);
    if (!fires(h, infected, ev.witness, e, m)) return where + "rule does not fire";
    if (ev.newly_infected != e - infected) return where + "newly infected set mismatch";
    if (ev.newly_infected.empty()) return where + "infects nothing new";
    infected |= e;
  }
  if (infected != trace.final) return std::string("final set mismatch");
  return std::nullopt;
}

nlohmann::json trace_json(const Hypergraph& h, const InfectionTrace& trace) {
  nlohmann::json events = nlohmann::json::array();
  for (const auto& ev : trace.events) {
    events.push_back({{"witness", io::labels_json(ev.witness)},
                      {"edge_index", ev.edge_index + 1},
                      {"edge", io::labels_json(h.edge(ev.edge_index))},
                      {"infected", io::labels_json(ev.newly_infected)}});
  }
  return {{"seed", io::labels_json(trace.seed)},
          {"events", std::move(events)},
          {"final", io::labels_json(trace.final)}};
}

InfectionTrace trace_from_json(const nlohmann::json& j) {
  try {
    InfectionTrace t;
    t.seed = from_labels(j.at("seed"));
    for (const auto& ev : j.at("events")) {
      const auto idx = ev.at("edge_index").get<long long>();
      if (idx < 1) throw InvalidInput("edge indices are 1-based");
      t.events.push_back({from_labels(ev.at("witness")), static_cast<std::size_t>(idx - 1),
                          from_labels(ev.at("infected"))});
    }
    t.final = from_labels(j.at("final"));
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed trace JSON: ") + e.what());
  }
}

}  // namespace hyperinfect
