#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "json.hpp"

#include "hyperinfect/hypergraph.hpp"
#include "hyperinfect/infection.hpp"

namespace hyperinfect {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// kDefaultBudget, or HYPERINFECT_BUDGET from the environment when it parses
/// as a positive integer.
std::uint64_t default_budget();

struct SolverOptions {
  int m = 1;
  std::uint64_t budget = default_budget();  // closure evaluations per component
  unsigned threads = 1;
};

struct SolverResult {
  std::size_t infection_number = 0;
  VertexSet witness;  // lexicographically least among minimum infection sets
  InfectionTrace trace;
  std::size_t lower_bound_used = 0;  // summed over components
  std::size_t upper_bound_used = 0;
  std::uint64_t enumerated_count = 0;
  int m = 1;
};

/// n - kmax + m (at most n), the seed being everything outside a largest edge
/// plus m of its vertices. n for trivial hypergraphs or when kmax < m.
std::size_t upper_bound(const Hypergraph& h, int m = 1);

/// Lower bound on I(H), hence on every I_m(H). No seed of size <= t can fire
/// a first edge when, for every edge E and proper nonempty B of E with
/// |B| = s <= t, some edge through B has at least t - s + 1 vertices outside E.
/// Returns the largest such t plus one, capped by upper_bound.
std::size_t multiplicity_lower_bound(const Hypergraph& h);

/// Exact (m-)infection number. Throws BudgetExceeded when a component's
/// remaining search would exceed the budget.
SolverResult infection_number(const Hypergraph& h, const SolverOptions& options = {});

/// Throws InvalidInput unless g is a graph (every edge of size 2).
SolverResult zero_forcing_number(const Hypergraph& g, const SolverOptions& options = {});

nlohmann::json result_json(const Hypergraph& h, const SolverResult& r, bool with_trace = false);

enum class ConjectureStatus { Holds, Violated, NotApplicable };

struct ConjectureReport {
  ConjectureStatus status = ConjectureStatus::NotApplicable;
  std::size_t infection_number = 0;
  std::size_t k = 0;
  std::uint64_t infection_sets_checked = 0;
  std::optional<VertexSet> counterexample_seed;       // an infection set of size n - k + 1
  std::optional<VertexSet> counterexample_uninfected;  // V minus that seed, inside no edge
};

/// For k-uniform H with I(H) = n - k + 1: every minimum infection set should
/// leave out a (k-1)-set lying inside some edge. Checks all of them.
/// Throws InvalidInput unless H is k-uniform with at least one edge.
ConjectureReport check_conjecture(const Hypergraph& h, const SolverOptions& options = {});

const char* to_string(ConjectureStatus s);
nlohmann::json conjecture_json(const ConjectureReport& r);

}  // namespace hyperinfect
