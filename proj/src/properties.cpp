#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "hyperinfect/combinatorics.hpp"
#include "hyperinfect/designs.hpp"
#include "hyperinfect/enumerate.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/infection.hpp"
#include "hyperinfect/io.hpp"
#include "hyperinfect/oracles.hpp"
#include "hyperinfect/verify.hpp"

namespace hyperinfect {
namespace {

std::string str(std::size_t x) { return std::to_string(x); }

std::string show(const Hypergraph& h) {
  std::string s = str(h.vertex_count()) + ":";
  for (const auto& e : h.edges()) s += e.to_string();
  return s;
}

VertexSet from_mask(std::uint32_t m) {
  VertexSet s;
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

VertexSet random_seed(Rng& rng, std::size_t n) {
  VertexSet s;
  for (Vertex v = 0; v < n; ++v) {
    if (rng() & 1U) s.insert(v);
  }
  return s;
}

Hypergraph small_random(Rng& rng, std::size_t max_n) {
  return random_hypergraph(rng, uniform_between(rng, 1, max_n), 8, 4);
}

// mismatch text when the three closure routes disagree, empty otherwise
std::string closure_mismatch(const Hypergraph& h, const VertexSet& seed, int m) {
  const VertexSet a = closure(h, seed, m).final;
  const VertexSet b = closure_oracle(h, seed, m);
  const VertexSet c = derived_set(h, seed, m);
  if (a == b && b == c) return {};
  return "seed " + seed.to_string() + " m=" + std::to_string(m) + ": closure " + a.to_string() +
         " oracle " + b.to_string() + " engine " + c.to_string();
}

std::vector<TheoremCase> build_properties() {
  std::vector<TheoremCase> r;

  r.push_back({"oracle-exhaustive", {"property", "oracle"}, "definition of the infection rule",
               "closure = closure_oracle = engine for every seed and m in {1,2,3}",
               "every labelled hypergraph on 1..4 vertices (all edge subsets)", [](CaseContext& c) {
                 for (std::size_t n = 1; n <= 4; ++n) {
                   const std::uint32_t subsets = (1U << n) - 1;  // nonempty vertex subsets
                   for (std::uint32_t pick = 0; pick < (1U << subsets); ++pick) {
                     EdgeMasks edges;
                     for (std::uint32_t p = pick; p != 0; p &= p - 1) {
                       edges.push_back(static_cast<std::uint32_t>(std::countr_zero(p)) + 1);
                     }
                     const Hypergraph h = from_masks(n, edges);
                     std::string bad;
                     for (std::uint32_t s = 0; s < (1U << n) && bad.empty(); ++s) {
                       for (int m = 1; m <= 3 && bad.empty(); ++m) bad = closure_mismatch(h, from_mask(s), m);
                     }
                     c.check(bad.empty(), show(h), bad.empty() ? "all seeds agree" : bad, &h);
                   }
                 }
               }});

  r.push_back({"oracle-random", {"property", "oracle"}, "definition of the infection rule",
               "closure = closure_oracle = engine", "random hypergraphs with n <= 8, random seeds, m in {1,2,3}",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 8);
                   const VertexSet seed = random_seed(c.rng(), h.vertex_count());
                   std::string bad;
                   for (int m = 1; m <= 3 && bad.empty(); ++m) bad = closure_mismatch(h, seed, m);
                   c.check(bad.empty(), show(h), bad.empty() ? "seed " + seed.to_string() + " agrees" : bad, &h);
                 }
               }});

  r.push_back({"trace-replay", {"property", "closure"}, "definition of the infection rule",
               "every closure trace replays legally and survives a JSON round trip",
               "random hypergraphs with n <= 8, random seeds, m in {1,2}", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 8);
                   const VertexSet seed = random_seed(c.rng(), h.vertex_count());
                   for (int m = 1; m <= 2; ++m) {
                     const InfectionTrace t = closure(h, seed, m);
                     const auto problem = validate_trace(h, t, m);
                     const bool round = trace_from_json(trace_json(h, t)) == t;
                     c.check(!problem && round, show(h), problem ? *problem : round ? "replays" : "json differs", &h);
                   }
                 }
               }});

  r.push_back({"closure-monotone", {"property", "closure"}, "definition of the derived set",
               "seed inside final, larger seeds give larger finals, closure is idempotent, "
               "raising m shrinks the final set",
               "random hypergraphs with n <= 8, random nested seeds", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 8);
                   const VertexSet a = random_seed(c.rng(), h.vertex_count());
                   const VertexSet b = a | random_seed(c.rng(), h.vertex_count());
                   const VertexSet fa = derived_set(h, a);
                   const VertexSet fb = derived_set(h, b);
                   const VertexSet f2 = derived_set(h, a, 2);
                   const bool ok = a.is_subset_of(fa) && fa.is_subset_of(fb) && derived_set(h, fa) == fa &&
                                   f2.is_subset_of(fa);
                   c.check(ok, show(h), "seeds " + a.to_string() + " " + b.to_string(), &h);
                 }
               }});

  r.push_back({"solver-exact", {"property", "oracle"}, "definition of the infection number",
               "solver value = minimum over all subsets by the literal rule; the witness is the "
               "lexicographically least minimum infection set and its trace replays",
               "random hypergraphs with n <= 7, m in {1,2}", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 7);
                   const auto n = static_cast<std::uint32_t>(h.vertex_count());
                   for (int m = 1; m <= 2; ++m) {
                     const std::string name = show(h) + " m=" + str(m);
                     c.instance(name, [&] {
                       const SolverResult res = c.solve(h, m);
                       const std::size_t flat = flat_infection_number(h, m, true);
                       std::vector<std::uint32_t> comb = unrank_combination(0, n, static_cast<std::uint32_t>(flat));
                       VertexSet first;
                       do {
                         VertexSet s;
                         for (auto v : comb) s.insert(v);
                         if (closure_oracle(h, s, m) == h.vertices()) {
                           first = s;
                           break;
                         }
                       } while (next_combination(comb, n));
                       const bool ok = res.infection_number == flat && res.witness == first &&
                                       !validate_trace(h, res.trace, m) && res.trace.final == h.vertices();
                       c.check(ok, name,
                               "solver " + str(res.infection_number) + " " + res.witness.to_string() + ", oracle " +
                                   str(flat) + " " + first.to_string(),
                               &h);
                     });
                   }
                 }
               }});

  r.push_back({"bound-sandwich", {"property", "inequality", "bounds"},
               "general lower and upper bounds", "multiplicity bound <= I_m <= n - kmax + m",
               "random hypergraphs with n <= 8, m in {1,2,3}", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 8);
                   for (int m = 1; m <= 3; ++m) {
                     const std::string name = show(h) + " m=" + str(m);
                     c.instance(name, [&] {
                       const std::size_t v = c.number(h, m);
                       const std::size_t lo = multiplicity_lower_bound(h);
                       const std::size_t hi = upper_bound(h, m);
                       c.check(lo <= v && v <= hi, name, str(lo) + " <= " + str(v) + " <= " + str(hi), &h);
                     });
                   }
                 }
               }});

  r.push_back({"random-reduce-invariance", {"property", "invariance"},
               "remark that edges inside other edges never matter", "I(H) = I(reduce(H))",
               "random hypergraphs with n <= 8", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 8);
                   const std::string name = show(h);
                   c.instance(name, [&] { c.check_eq(name, c.number(reduce(h)), c.number(h), &h); });
                 }
               }});

  r.push_back({"random-component-additivity", {"property", "invariance"},
               "remark that components are infected independently",
               "unsplit subset search on H = sum of the same search on its components",
               "random hypergraphs with n <= 9", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 9), 5, 3);
                   std::size_t sum = 0;
                   for (const auto& part : components(h)) sum += flat_infection_number(part.graph, 1, false);
                   c.check_eq(show(h), flat_infection_number(h, 1, false), sum, &h);
                 }
               }});

  r.push_back({"io-roundtrip", {"property", "core"}, "file formats",
               "text and JSON forms parse back to the same canonical hypergraph",
               "random hypergraphs with n <= 8", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 8);
                   const bool ok = io::parse_hg(io::to_hg(h)) == h && io::from_json(io::to_json(h)) == h &&
                                   io::parse_any(io::to_json(h).dump()) == h &&
                                   Hypergraph::build(h.vertex_count(), h.edges()) == h;
                   c.check(ok, show(h), "round trip", &h);
                 }
               }});

  r.push_back({"generator-roundtrip", {"property", "core", "families"}, "family generators",
               "generation is deterministic and its text form parses back unchanged",
               "a fixed list of family parameters", [](CaseContext& c) {
                 const std::vector<FamilySpec> specs = {
                     Complete{5, 3}, Multipartite{{2, 3}}, Flower{1, {2, 2, 2}},
                     Interval{6, {{1, 3}, {3, 2}, {5, 2}}}, Hypercycle{{3, 3, 3, 3}, {1, 1, 1, 1}},
                     TightCycle{6, 4, 3}, AugmentedComplete{7, 3}, Trivial{3}};
                 for (const auto& spec : specs) {
                   const Hypergraph a = generate(spec);
                   const Hypergraph b = generate(spec);
                   c.check(a == b && io::parse_hg(io::to_hg(a)) == a, describe(spec), "stable", &a);
                 }
               }});

  r.push_back({"line-graph-structure", {"property", "core", "line-graph"}, "line graph definition",
               "L(H) joins exactly the intersecting edges; L(adjacency hypergraph of G) is G",
               "random non-trivial hypergraphs with n <= 8; connected graphs on 3..6 vertices",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = small_random(c.rng(), 8);
                   if (h.is_trivial()) continue;
                   const Hypergraph l = line_graph(h);
                   bool ok = l.vertex_count() == h.edge_count();
                   for (Vertex a = 0; a < h.edge_count(); ++a) {
                     for (Vertex b = a + 1; b < h.edge_count(); ++b) {
                       const bool edge = std::find(l.edges().begin(), l.edges().end(), VertexSet{a, b}) != l.edges().end();
                       ok = ok && edge == h.edge(a).intersects(h.edge(b));
                     }
                   }
                   c.check(ok, show(h), "adjacency matches intersection", &h);
                 }
                 for (std::size_t n = 3; n <= 6; ++n) {
                   for (const auto& g : connected_graphs(n)) {
                     const Hypergraph back = line_graph(adjacency_hypergraph(g));
                     c.check(canonical_form(n, to_masks(back)) == canonical_form(n, to_masks(g)), show(g),
                             "recovered up to isomorphism", &g);
                   }
                 }
               }});

  r.push_back({"threads-agree", {"property", "determinism"}, "solver parallelism",
               "threads 1 and 4 give the same value, witness, enumeration count and trace",
               "pg(3,3), pg(4,2), complete(12,5)", [](CaseContext& c) {
                 const std::vector<std::pair<std::string, Hypergraph>> pool = {
                     {"pg(3,3)", pg_design(3, 3)}, {"pg(4,2)", pg_design(4, 2)}, {"complete(12,5)", complete(12, 5)}};
                 for (const auto& [name, h] : pool) {
                   c.instance(name, [&] {
                     SolverOptions one;
                     one.budget = c.budget();
                     SolverOptions four = one;
                     four.threads = 4;
                     const SolverResult a = infection_number(h, one);
                     const SolverResult b = infection_number(h, four);
                     c.check(a.infection_number == b.infection_number && a.witness == b.witness &&
                                 a.enumerated_count == b.enumerated_count && a.trace == b.trace,
                             name, "I=" + str(a.infection_number) + " enumerated " + str(a.enumerated_count), &h);
                   });
                 }
               }});

  r.push_back({"conjecture-replay", {"property", "conjecture"},
               "closing conjecture on k-uniform hypergraphs with I = n - k + 1",
               "sweep counts are consistent, reruns match, and every stored counterexample replays",
               "3-uniform hypergraphs on <= 5 vertices", [](CaseContext& c) {
                 const ConjectureSweep s = conjecture_sweep(5, 3, c.budget());
                 const ConjectureSweep again = conjecture_sweep(5, 3, c.budget());
                 c.check(sweep_json(s) == sweep_json(again), "sweep", "rerun identical");
                 c.check(s.holds + s.counterexamples.size() == s.applicable && s.classes > 0, "sweep",
                         str(s.classes) + " classes, " + str(s.applicable) + " applicable");
                 for (const auto& ce : s.counterexamples) {
                   SolverOptions o;
                   o.budget = c.budget();
                   const auto rep = check_conjecture(ce.graph, o);
                   const bool ok = rep.status == ConjectureStatus::Violated &&
                                   is_infection_set(ce.graph, ce.seed) &&
                                   ce.uninfected == ce.graph.vertices() - ce.seed;
                   c.check(ok, show(ce.graph), "counterexample replays", &ce.graph);
                 }
               }});

  return r;
}

}  // namespace

const std::vector<TheoremCase>& property_registry() {
  static const std::vector<TheoremCase> registry = build_properties();
  return registry;
}

}  // namespace hyperinfect
