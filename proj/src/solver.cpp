#include "hyperinfect/solver.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <thread>

#include "engine.hpp"
#include "hyperinfect/combinatorics.hpp"
#include "hyperinfect/error.hpp"
#include "hyperinfect/io.hpp"

namespace hyperinfect {
namespace {

constexpr std::uint64_t kNotFound = std::numeric_limits<std::uint64_t>::max();
// Below this many candidates a level is not worth splitting across threads.
constexpr std::uint64_t kParallelThreshold = 4096;
// Cap on (subset, edge) inspections for the multiplicity bound.
constexpr std::uint64_t kBoundWork = std::uint64_t{1} << 22;

template <typename Mask>
Mask mask_of(const std::vector<std::uint32_t>& c) {
  Mask s;
  for (auto v : c) s.set(v);
  return s;
}

// Smallest rank r in [0, total) whose r-th s-combination infects everything.
template <typename Engine>
std::uint64_t search_level(const Engine& engine, std::uint32_t n, std::uint32_t s,
                           std::uint64_t total, int m, unsigned threads) {
  using Mask = typename Engine::Mask;
  if (threads <= 1 || total < kParallelThreshold) {
    std::vector<std::uint32_t> c = unrank_combination(0, n, s);
    for (std::uint64_t r = 0; r < total; ++r) {
      if (engine.infects_all(mask_of<Mask>(c), m)) return r;
      next_combination(c, n);
    }
    return kNotFound;
  }

  const std::uint64_t chunk = std::max<std::uint64_t>(256, total / (std::uint64_t{threads} * 64));
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{kNotFound};
  auto worker = [&] {
    while (true) {
      const std::uint64_t start = next.fetch_add(chunk);
      if (start >= total || start >= best.load()) return;
      const std::uint64_t stop = std::min(total, start + chunk);
      std::vector<std::uint32_t> c = unrank_combination(start, n, s);
      for (std::uint64_t r = start; r < stop; ++r) {
        if (r >= best.load(std::memory_order_relaxed)) return;
        if (engine.infects_all(mask_of<Mask>(c), m)) {
          std::uint64_t seen = best.load();
          while (r < seen && !best.compare_exchange_weak(seen, r)) {
          }
          return;
        }
        next_combination(c, n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return best.load();
}

struct ComponentAnswer {
  std::size_t value = 0;
  VertexSet witness;  // local labels
  std::size_t lower = 0;
  std::size_t upper = 0;
  std::uint64_t enumerated = 0;
};

ComponentAnswer solve_component(const Hypergraph& g, const SolverOptions& o) {
  ComponentAnswer a;
  const std::size_t n = g.vertex_count();
  if (g.is_trivial()) {
    a.value = a.lower = a.upper = n;
    a.witness = g.vertices();
    return a;
  }
  a.upper = upper_bound(g, o.m);
  a.lower = std::max(multiplicity_lower_bound(g), std::min<std::size_t>(o.m, n));
  a.lower = std::min(a.lower, a.upper);
  const auto nn = static_cast<std::uint32_t>(n);

  detail::with_engine(g, [&](const auto& engine) {
    for (std::size_t s = a.lower; s <= a.upper; ++s) {
      const std::uint64_t total = binomial(n, s);
      if (total > o.budget || a.enumerated > o.budget - total) {
        throw BudgetExceeded("search over a component with " + std::to_string(n) +
                             " vertices needs C(" + std::to_string(n) + "," + std::to_string(s) +
                             ") = " + std::to_string(total) + " more closures after " +
                             std::to_string(a.enumerated) + "; budget is " +
                             std::to_string(o.budget) + " (raise HYPERINFECT_BUDGET)");
      }
      const auto ss = static_cast<std::uint32_t>(s);
      const std::uint64_t rank =
          s == n ? 0 : search_level(engine, nn, ss, total, o.m, o.threads);
      if (rank == kNotFound) {
        a.enumerated += total;
        continue;
      }
      a.enumerated += rank + 1;
      a.value = s;
      for (auto v : unrank_combination(rank, nn, ss)) a.witness.insert(v);
      return;
    }
    // upper bound is always achievable
    throw std::logic_error("no infection set up to the upper bound");
  });
  return a;
}

}  // namespace

std::uint64_t default_budget() {
  const char* env = std::getenv("HYPERINFECT_BUDGET");
  if (env == nullptr || *env == '\0') return kDefaultBudget;
  std::uint64_t value = 0;
  const char* end = env + std::strlen(env);
  auto [ptr, ec] = std::from_chars(env, end, value);
  if (ec != std::errc() || ptr != end || value == 0) {
    throw InvalidInput("HYPERINFECT_BUDGET must be a positive integer");
  }
  return value;
}

std::size_t upper_bound(const Hypergraph& h, int m) {
  if (m < 1) throw InvalidInput("m must be at least 1");
  const std::size_t n = h.vertex_count();
  if (h.is_trivial()) return n;
  const std::size_t kmax = h.edges().back().size();
  if (kmax < static_cast<std::size_t>(m)) return n;
  return std::min(n, n - kmax + static_cast<std::size_t>(m));
}

std::size_t multiplicity_lower_bound(const Hypergraph& h) {
  const std::size_t ub = upper_bound(h);
  if (ub <= 1) return 1;
  const auto& edges = h.edges();
  std::vector<std::vector<std::size_t>> incident(h.vertex_count());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Vertex v : edges[i]) incident[v].push_back(i);
  }

  std::uint64_t work = 0;
  std::size_t running = std::numeric_limits<std::size_t>::max();
  std::size_t best = 0;
  for (std::size_t s = 1; s < ub; ++s) {
    std::uint64_t cost = 0;
    for (const auto& e : edges) {
      if (e.size() <= s) continue;
      const std::uint64_t b = binomial(e.size(), s);
      cost = b > kBoundWork ? kBoundWork + 1 : cost + b * edges.size();
      if (cost > kBoundWork) break;
    }
    if (work + cost > kBoundWork) break;
    work += cost;

    std::size_t g = std::numeric_limits<std::size_t>::max();
    for (const auto& e : edges) {
      if (e.size() <= s || g < s) continue;
      const std::vector<Vertex> members = e.members();
      const auto k = static_cast<std::uint32_t>(members.size());
      std::vector<std::uint32_t> c = unrank_combination(0, k, static_cast<std::uint32_t>(s));
      do {
        VertexSet b;
        for (auto i : c) b.insert(members[i]);
        std::size_t slack = 0;
        for (std::size_t j : incident[b.front()]) {
          if (b.is_subset_of(edges[j])) slack = std::max(slack, (edges[j] - e).size());
        }
        g = std::min(g, slack + s - 1);
      } while (g >= s && next_combination(c, k));
    }
    running = std::min(running, g);
    if (running < s) break;
    best = s;
  }
  return best + 1;
}

SolverResult infection_number(const Hypergraph& h, const SolverOptions& options) {
  if (options.m < 1) throw InvalidInput("m must be at least 1");
  SolverOptions o = options;
  if (o.threads == 0) o.threads = 1;
  SolverResult r;
  r.m = o.m;
  for (const auto& comp : components(h)) {
    const ComponentAnswer a = solve_component(comp.graph, o);
    r.infection_number += a.value;
    r.lower_bound_used += a.lower;
    r.upper_bound_used += a.upper;
    r.enumerated_count += a.enumerated;
    r.witness |= comp.lift(a.witness);
  }
  r.trace = closure(h, r.witness, o.m);
  return r;
}

SolverResult zero_forcing_number(const Hypergraph& g, const SolverOptions& options) {
  if (!g.is_trivial() && structure(g).uniform_size != std::size_t{2}) {
    throw InvalidInput("zero forcing needs a graph (every edge of size 2)");
  }
  SolverOptions o = options;
  o.m = 1;
  return infection_number(g, o);
}

nlohmann::json result_json(const Hypergraph& h, const SolverResult& r, bool with_trace) {
  nlohmann::json j = {{"infection_number", r.infection_number},
                      {"witness", io::labels_json(r.witness)},
                      {"m", r.m},
                      {"bounds", {{"lower", r.lower_bound_used}, {"upper", r.upper_bound_used}}},
                      {"enumerated", r.enumerated_count}};
  if (with_trace) j["trace"] = trace_json(h, r.trace);
  return j;
}

ConjectureReport check_conjecture(const Hypergraph& h, const SolverOptions& options) {
  const auto report = structure(h);
  if (h.is_trivial() || !report.uniform_size) {
    throw InvalidInput("the conjecture check needs a k-uniform hypergraph with at least one edge");
  }
  ConjectureReport out;
  out.k = *report.uniform_size;
  SolverOptions o = options;
  o.m = 1;
  out.infection_number = infection_number(h, o).infection_number;
  const std::size_t n = h.vertex_count();
  const std::size_t size = n - out.k + 1;
  if (out.infection_number != size) return out;

  const std::uint64_t total = binomial(n, size);
  if (total > o.budget) {
    throw BudgetExceeded("conjecture check needs C(" + std::to_string(n) + "," +
                         std::to_string(size) + ") = " + std::to_string(total) +
                         " closures; budget is " + std::to_string(o.budget));
  }
  out.status = ConjectureStatus::Holds;
  const auto nn = static_cast<std::uint32_t>(n);
  detail::with_engine(h, [&](const auto& engine) {
    using Mask = typename std::decay_t<decltype(engine)>::Mask;
    std::vector<std::uint32_t> c = unrank_combination(0, nn, static_cast<std::uint32_t>(size));
    do {
      if (!engine.infects_all(mask_of<Mask>(c), 1)) continue;
      ++out.infection_sets_checked;
      VertexSet seed;
      for (auto v : c) seed.insert(v);
      const VertexSet rest = h.vertices() - seed;
      const bool inside = std::any_of(h.edges().begin(), h.edges().end(),
                                      [&](const VertexSet& e) { return rest.is_subset_of(e); });
      if (!inside) {
        out.status = ConjectureStatus::Violated;
        out.counterexample_seed = seed;
        out.counterexample_uninfected = rest;
        return;
      }
    } while (next_combination(c, nn));
  });
  return out;
}

const char* to_string(ConjectureStatus s) {
  switch (s) {
    case ConjectureStatus::Holds:
      return "holds";
    case ConjectureStatus::Violated:
      return "violated";
    case ConjectureStatus::NotApplicable:
      return "not_applicable";
  }
  return "unknown";
}

nlohmann::json conjecture_json(const ConjectureReport& r) {
  nlohmann::json j = {{"status", to_string(r.status)},
                      {"infection_number", r.infection_number},
                      {"k", r.k},
                      {"infection_sets_checked", r.infection_sets_checked}};
  if (r.counterexample_seed) {
    j["counterexample"] = {{"seed", io::labels_json(*r.counterexample_seed)},
                           {"uninfected", io::labels_json(*r.counterexample_uninfected)}};
  }
  return j;
}

}  // namespace hyperinfect
