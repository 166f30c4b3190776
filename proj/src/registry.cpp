#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <string>
#include <vector>

#include "hyperinfect/combinatorics.hpp"
#include "hyperinfect/designs.hpp"
#include "hyperinfect/enumerate.hpp"
#include "hyperinfect/families.hpp"
#include "hyperinfect/infection.hpp"
#include "hyperinfect/oracles.hpp"
#include "hyperinfect/products.hpp"
#include "hyperinfect/verify.hpp"

namespace hyperinfect {
namespace {

std::string str(std::size_t x) { return std::to_string(x); }

std::string tuple(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + str(v[i]);
  return s + ")";
}

// compact instance label: "5:{1,2}{3,4}"
std::string show(const Hypergraph& h) {
  std::string s = str(h.vertex_count()) + ":";
  for (const auto& e : h.edges()) s += e.to_string();
  return s;
}

Hypergraph graph(std::size_t n, const std::vector<std::vector<Vertex>>& edges) {
  return Hypergraph::build(n, edges);
}

// classes of reduced non-trivial hypergraphs on n <= 6 vertices, computed once
const std::vector<EdgeMasks>& antichains(std::size_t n) {
  static const auto cache = [] {
    std::array<std::vector<EdgeMasks>, 7> a;
    for (std::size_t i = 1; i <= 6; ++i) a[i] = antichain_classes(i);
    return a;
  }();
  return cache.at(n);
}

bool has_isolated(const Hypergraph& h) { return structure(h).min_degree == 0; }

bool connected_no_isolated(const Hypergraph& h) {
  return !h.is_trivial() && !has_isolated(h) && components(h).size() == 1;
}

Hypergraph random_nontrivial(Rng& rng, std::size_t n_lo, std::size_t n_hi, std::size_t edges,
                             std::size_t size) {
  while (true) {
    Hypergraph h = random_hypergraph(rng, uniform_between(rng, n_lo, n_hi), edges, size);
    if (!h.is_trivial()) return h;
  }
}

Hypergraph random_graph_with_edge(Rng& rng, std::size_t n_lo, std::size_t n_hi) {
  while (true) {
    Hypergraph g = random_graph(rng, uniform_between(rng, n_lo, n_hi));
    if (!g.is_trivial()) return g;
  }
}

// Hypercycles with c >= 3 edges and at most max_vertices vertices: every
// overlap size >= 1, every private part >= 0.
void for_each_hypercycle(
    std::size_t max_vertices,
    const std::function<void(const std::vector<std::size_t>&, const std::vector<std::size_t>&,
                             const std::string&)>& fn) {
  for (std::size_t c = 3; c <= max_vertices; ++c) {
    std::vector<std::size_t> extra(2 * c, 0);  // overlap extras then privates
    std::function<void(std::size_t, std::size_t)> fill = [&](std::size_t pos, std::size_t left) {
      if (pos == extra.size()) {
        std::vector<std::size_t> overlaps(c), privates(c), sizes(c);
        for (std::size_t i = 0; i < c; ++i) {
          overlaps[i] = 1 + extra[i];
          privates[i] = extra[c + i];
        }
        for (std::size_t i = 0; i < c; ++i) {
          sizes[i] = overlaps[(i + c - 1) % c] + privates[i] + overlaps[i];
        }
        fn(sizes, overlaps, "hypercycle(o=" + tuple(overlaps) + ",p=" + tuple(privates) + ")");
        return;
      }
      for (std::size_t x = 0; x <= left; ++x) {
        extra[pos] = x;
        fill(pos + 1, left - x);
      }
      extra[pos] = 0;
    };
    fill(0, max_vertices - c);
  }
}

// Loose paths: consecutive edges of size k sharing `overlap` vertices.
Hypergraph loose_path(std::size_t edges, std::size_t k, std::size_t overlap) {
  const std::size_t step = k - overlap;
  std::vector<std::pair<std::size_t, std::size_t>> iv;
  for (std::size_t i = 0; i < edges; ++i) iv.emplace_back(1 + i * step, k);
  return interval(step * (edges - 1) + k, iv);
}

Hypergraph affine_plane(std::size_t q) {
  std::vector<VertexSet> lines;
  const auto at = [q](std::size_t x, std::size_t y) { return static_cast<Vertex>(x * q + y); };
  for (std::size_t x = 0; x < q; ++x) {
    for (std::size_t y = 0; y < q; ++y) {
      VertexSet vertical;
      for (std::size_t c = 0; c < q; ++c) vertical.insert(at(x, c));
      lines.push_back(vertical);
      for (std::size_t slope = 0; slope < q; ++slope) {
        VertexSet l;
        for (std::size_t c = 0; c < q; ++c) l.insert(at((x + c) % q, (y + slope * c) % q));
        lines.push_back(l);
      }
    }
  }
  return Hypergraph::build(q * q, std::move(lines));
}

// planes of AG(3,2): 4-subsets of {0..7} with zero xor, a 3-(8,4,1) design
Hypergraph boolean_quadruples() {
  std::vector<VertexSet> blocks;
  for (std::uint32_t m : subsets_of_size(8, 4)) {
    std::uint32_t x = 0;
    for (std::uint32_t r = m; r != 0; r &= r - 1) x ^= static_cast<std::uint32_t>(std::countr_zero(r));
    if (x != 0) continue;
    VertexSet b;
    for (std::uint32_t r = m; r != 0; r &= r - 1) b.insert(static_cast<Vertex>(std::countr_zero(r)));
    blocks.push_back(b);
  }
  return Hypergraph::build(8, std::move(blocks));
}

struct NamedDesign {
  std::string name;
  Hypergraph h;
  std::size_t t;
};

std::vector<NamedDesign> design_pool() {
  return {{"pg(2,2)", pg_design(2, 2), 2}, {"pg(2,3)", pg_design(2, 3), 2},
          {"pg(3,2)", pg_design(3, 2), 2}, {"ag(2,3)", affine_plane(3), 2},
          {"quadruples(8)", boolean_quadruples(), 3}};
}

// calls fn for every subset of {0..n-1} with 1..max_size members, lex by size
void for_each_small_subset(std::size_t n, std::size_t max_size,
                           const std::function<void(const VertexSet&)>& fn) {
  const auto nn = static_cast<std::uint32_t>(n);
  for (std::uint32_t s = 1; s <= max_size && s <= nn; ++s) {
    std::vector<std::uint32_t> c = unrank_combination(0, nn, s);
    do {
      VertexSet w;
      for (auto v : c) w.insert(v);
      fn(w);
    } while (next_combination(c, nn));
  }
}

struct FactorSpec {
  std::size_t n, k;
};

// multisets of >= 2 complete factors with total vertex count <= max_total
void for_each_complete_product(std::size_t max_total,
                               const std::function<void(const std::vector<FactorSpec>&)>& fn) {
  std::vector<FactorSpec> all;
  for (std::size_t n = 1; n <= max_total; ++n) {
    for (std::size_t k = 1; k <= n; ++k) all.push_back({n, k});
  }
  std::vector<FactorSpec> cur;
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t from, std::size_t left) {
    if (cur.size() >= 2) fn(cur);
    for (std::size_t i = from; i < all.size(); ++i) {
      if (all[i].n > left) continue;
      cur.push_back(all[i]);
      grow(i, left - all[i].n);
      cur.pop_back();
    }
  };
  grow(0, max_total);
}

std::string factors_name(const std::vector<FactorSpec>& fs) {
  std::string s;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    s += (i ? " x " : "") + std::string("complete(") + str(fs[i].n) + "," + str(fs[i].k) + ")";
  }
  return s;
}

void direct_product_regime(CaseContext& c, bool large_factor) {
  for_each_complete_product(10, [&](const std::vector<FactorSpec>& fs) {
    const bool large = std::any_of(fs.begin(), fs.end(), [](auto f) { return f.n >= 2 * f.k; });
    if (large != large_factor) return;
    std::vector<Hypergraph> parts;
    std::size_t sum = 0;
    for (auto f : fs) {
      parts.push_back(complete(f.n, f.k));
      sum += f.n - f.k;
    }
    const Hypergraph h = direct_product(parts).graph;
    const std::string name = factors_name(fs);
    c.instance(name, [&] { c.check_eq(name, c.number(h), large ? sum : sum + 1, &h); });
  });
}

void tight_cycle_lemma(CaseContext& c, int which) {
  for (std::size_t k = 3; k <= 5; ++k) {
    for (std::size_t n = k; n <= std::min<std::size_t>(2 * k + 2, 10); ++n) {
      std::size_t expected = 0;
      int regime = 0;
      if (n >= 2 * k - 1) {
        regime = 1;
        expected = 2;
      } else if (n > k) {
        regime = 2;
        const std::size_t i = (k - 1 + (n - k) - 1) / (n - k);
        expected = std::min(i + 1, n - k + 1);
      } else {
        regime = 3;
        expected = 1;
      }
      if (regime != which) continue;
      const TightCycle spec{n, k, k - 1};
      const Hypergraph h = generate(spec);
      const std::string name = describe(spec);
      c.instance(name, [&] { c.check_eq(name, c.number(h), expected, &h); });
    }
  }
}

std::vector<TheoremCase> build_registry() {
  std::vector<TheoremCase> r;

  r.push_back({"trivial", {"core"}, "opening remark on edgeless hypergraphs",
               "I = n", "edgeless hypergraphs with 1 <= n <= 8", [](CaseContext& c) {
                 for (std::size_t n = 1; n <= 8; ++n) {
                   const Hypergraph h = trivial(n);
                   const std::string name = "trivial(" + str(n) + ")";
                   c.instance(name, [&] { c.check_eq(name, c.number(h), n, &h); });
                 }
               }});

  r.push_back({"upper-bound", {"core", "inequality", "bounds"},
               "basic bound from the complement of a largest edge",
               "I <= n - kmax + 1",
               "random hypergraphs with n <= 8, up to 8 edges of size <= 5", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = random_nontrivial(c.rng(), 1, 8, 8, 5);
                   const std::string name = show(h);
                   c.instance(name, [&] {
                     c.check_le(name, c.number(h),
                                h.vertex_count() - structure(h).max_edge_size + 1, &h);
                   });
                 }
               }});

  r.push_back({"component-additivity", {"core", "invariance"},
               "remark that components are infected independently",
               "I(A + B) = I(A) + I(B)",
               "random pairs with 1..5 vertices each; sizes from an unsplit subset search",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph a = random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 5), 4, 3);
                   const Hypergraph b = random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 5), 4, 3);
                   const Hypergraph u = disjoint_union(a, b);
                   const std::string name = show(u);
                   const std::size_t fa = flat_infection_number(a, 1, false);
                   const std::size_t fb = flat_infection_number(b, 1, false);
                   c.check_eq(name + " flat", flat_infection_number(u, 1, false), fa + fb, &u);
                   c.instance(name, [&] { c.check_eq(name, c.number(u), fa + fb, &u); });
                 }
               }});

  r.push_back({"zero-forcing-equivalence", {"core", "graph"},
               "remark that the rule restricted to graphs is zero forcing",
               "I(G) = Z(G) for every simple graph G",
               "all connected graphs on <= 7 vertices and random graphs on <= 8 vertices; Z by the "
               "colour-change rule",
               [](CaseContext& c) {
                 std::vector<Hypergraph> gs;
                 for (std::size_t n = 1; n <= 7; ++n) {
                   for (auto& g : connected_graphs(n)) gs.push_back(std::move(g));
                 }
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   gs.push_back(random_graph(c.rng(), uniform_between(c.rng(), 1, 8)));
                 }
                 for (const auto& g : gs) {
                   const std::string name = show(g);
                   c.instance(name, [&] { c.check_eq(name, c.number(g), zero_forcing_oracle(g), &g); });
                 }
               }});

  r.push_back({"superedge", {"core"}, "remark on hypergraphs containing an edge equal to V",
               "I = 1 and every single vertex is an infection set",
               "random hypergraphs with n <= 8 plus the full edge", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph base = random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 8), 6, 4);
                   auto edges = base.edges();
                   edges.push_back(base.vertices());
                   const Hypergraph h = Hypergraph::build(base.vertex_count(), edges);
                   const std::string name = show(h);
                   c.instance(name, [&] { c.check_eq(name, c.number(h), 1, &h); });
                   bool all = true;
                   for (Vertex v = 0; v < h.vertex_count(); ++v) all = all && is_infection_set(h, VertexSet{v});
                   c.check(all, name, "every singleton infects", &h);
                 }
               }});

  r.push_back({"reduce-invariance", {"reduced", "invariance"},
               "remark that edges inside other edges never matter",
               "I(H) = I(reduce(H))",
               "every hypergraph on <= 4 vertices up to isomorphism, plus random ones with n <= 8",
               [](CaseContext& c) {
                 auto one = [&](const Hypergraph& h) {
                   const Hypergraph red = reduce(h);
                   const std::string name = show(h);
                   c.instance(name, [&] { c.check_eq(name, c.number(h), c.number(red), &h); });
                 };
                 for (std::size_t n = 1; n <= 4; ++n) {
                   std::vector<std::uint32_t> cand;
                   for (std::uint32_t m = 1; m < (1U << n); ++m) cand.push_back(m);
                   for_each_class(n, cand, [&](const EdgeMasks& e) { one(from_masks(n, e)); });
                 }
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   one(random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 8), 8, 5));
                 }
               }});

  r.push_back({"degree-one-necessity", {"reduced", "invariance"},
               "lemma on reduced hypergraphs with infection number one",
               "reduced, non-trivial, I = 1 implies a vertex of degree 1",
               "every reduced non-trivial hypergraph on <= 6 vertices up to isomorphism, plus "
               "random reduced ones with n <= 8",
               [](CaseContext& c) {
                 auto one = [&](const Hypergraph& h) {
                   if (h.is_trivial()) return;
                   const std::string name = show(h);
                   c.instance(name, [&] {
                     const std::size_t i = c.number(h);
                     c.check(i != 1 || structure(h).min_degree == 1, name,
                             "I=" + str(i) + " min degree " + str(structure(h).min_degree), &h);
                   });
                 };
                 for (std::size_t n = 1; n <= 6; ++n) {
                   for (const auto& e : antichains(n)) one(from_masks(n, e));
                 }
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   one(reduce(random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 8), 8, 5)));
                 }
               }});

  r.push_back({"complete", {"families", "complete"},
               "lemma on complete k-uniform hypergraphs", "I = n - k + 1",
               "1 <= k <= n <= 8", [](CaseContext& c) {
                 for (std::size_t n = 1; n <= 8; ++n) {
                   for (std::size_t k = 1; k <= n; ++k) {
                     const Complete spec{n, k};
                     const Hypergraph h = generate(spec);
                     const std::string name = describe(spec);
                     c.instance(name, [&] { c.check_eq(name, c.number(h), n - k + 1, &h); });
                   }
                 }
               }});

  r.push_back({"infection-one-extension", {"families"},
               "proposition that every k-uniform hypergraph sits inside one with I = 1",
               "the layered extension keeps every edge, stays k-uniform, and has I = 1",
               "complete(n,k) for k in {3,4}, k <= n <= 7, plus random 3-uniform hypergraphs on <= 7 "
               "vertices; k >= 3 only",
               [](CaseContext& c) {
                 std::vector<Hypergraph> pool;
                 for (std::size_t k = 3; k <= 4; ++k) {
                   for (std::size_t n = k; n <= 7; ++n) pool.push_back(complete(n, k));
                 }
                 for (std::size_t i = 0; i < c.count() / 4; ++i) {
                   const std::size_t n = uniform_between(c.rng(), 3, 7);
                   pool.push_back(random_uniform(c.rng(), n, 3, uniform_between(c.rng(), 1, 5)));
                 }
                 for (const auto& h : pool) {
                   const Hypergraph x = infection_one_extension(h);
                   const std::string name = show(h);
                   const std::size_t k = h.edge(0).size();
                   bool keeps = true;
                   for (const auto& e : h.edges()) {
                     keeps = keeps && std::find(x.edges().begin(), x.edges().end(), e) != x.edges().end();
                   }
                   c.check(keeps && structure(x).uniform_size == k, name, "extension keeps edges and k", &x);
                   c.instance(name, [&] { c.check_eq(name + " extended", c.number(x), 1, &x); });
                 }
               }});

  r.push_back({"augmented-complete", {"families", "complete"},
               "proposition on a complete hypergraph with one vertex added to every edge",
               "n - k when n >= 2k - 1, otherwise n - k + 1", "k in {3,4}, k <= n <= 9",
               [](CaseContext& c) {
                 for (std::size_t k = 3; k <= 4; ++k) {
                   for (std::size_t n = k; n <= 9; ++n) {
                     const AugmentedComplete spec{n, k};
                     const Hypergraph h = generate(spec);
                     const std::string name = describe(spec);
                     const std::size_t expected = n >= 2 * k - 1 ? n - k : n - k + 1;
                     c.instance(name, [&] { c.check_eq(name, c.number(h), expected, &h); });
                   }
                 }
               }});

  r.push_back({"multipartite", {"families"},
               "lemma on complete k-partite k-uniform hypergraphs", "I = sum n_i - k",
               "part tuples (non-increasing) with sum <= 9; k = 1 and all-ones tuples fall outside "
               "the formula and are checked against n and 1",
               [](CaseContext& c) {
                 std::vector<std::size_t> parts;
                 std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t max_part,
                                                                          std::size_t left) {
                   if (!parts.empty()) {
                     const Multipartite spec{parts};
                     const Hypergraph h = generate(spec);
                     const std::string name = describe(spec);
                     std::size_t n = 0;
                     for (auto p : parts) n += p;
                     const std::size_t k = parts.size();
                     std::size_t expected = n - k;
                     if (k == 1) expected = n;
                     else if (n == k) expected = 1;
                     c.instance(name, [&] { c.check_eq(name, c.number(h), expected, &h); });
                   }
                   for (std::size_t p = std::min(max_part, left); p >= 1; --p) {
                     parts.push_back(p);
                     grow(p, left - p);
                     parts.pop_back();
                   }
                 };
                 grow(9, 9);
               }});

  r.push_back({"flower", {"families"}, "lemma on flowers", "I = p - 1 for p petals",
               "p in 2..5, core size in {1,2}, petal extras all 1, all 2, or 1,2,1,2...",
               [](CaseContext& c) {
                 for (std::size_t p = 2; p <= 5; ++p) {
                   for (std::size_t core = 1; core <= 2; ++core) {
                     std::vector<std::vector<std::size_t>> patterns = {
                         std::vector<std::size_t>(p, 1), std::vector<std::size_t>(p, 2), {}};
                     for (std::size_t i = 0; i < p; ++i) patterns[2].push_back(1 + i % 2);
                     for (const auto& extras : patterns) {
                       const Flower spec{core, extras};
                       const Hypergraph h = generate(spec);
                       const std::string name = describe(spec);
                       c.instance(name, [&] { c.check_eq(name, c.number(h), p - 1, &h); });
                     }
                   }
                 }
               }});

  r.push_back({"degree-two-bound", {"cycles"},
               "lemma on connected k-uniform hypergraphs of maximum degree two", "I <= k",
               "every connected uniform hypergraph on <= 6 vertices with maximum degree <= 2, "
               "uniform hypercycles on <= 12 vertices, tight cycles with 2t <= k and n <= 12, "
               "loose paths",
               [](CaseContext& c) {
                 auto one = [&](const Hypergraph& h, const std::string& name) {
                   const auto s = structure(h);
                   if (!s.uniform_size || s.max_degree > 2 || !connected_no_isolated(h)) return;
                   c.instance(name, [&] { c.check_le(name, c.number(h), *s.uniform_size, &h); });
                 };
                 for (std::size_t n = 1; n <= 6; ++n) {
                   for (const auto& e : antichains(n)) {
                     const Hypergraph h = from_masks(n, e);
                     one(h, show(h));
                   }
                 }
                 for_each_hypercycle(12, [&](const auto& sizes, const auto& overlaps, const std::string& name) {
                   if (std::adjacent_find(sizes.begin(), sizes.end(), std::not_equal_to<>()) != sizes.end()) return;
                   one(hypercycle(sizes, overlaps), name);
                 });
                 for (std::size_t k = 2; k <= 6; ++k) {
                   for (std::size_t t = 1; 2 * t <= k; ++t) {
                     for (std::size_t n = k; n <= 12; ++n) {
                       if (n % (k - t) != 0) continue;
                       const TightCycle spec{n, k, t};
                       one(generate(spec), describe(spec));
                     }
                   }
                 }
                 for (std::size_t k = 2; k <= 5; ++k) {
                   for (std::size_t ov = 1; 2 * ov <= k; ++ov) {
                     for (std::size_t m = 1; m <= 4; ++m) {
                       one(loose_path(m, k, ov), "path(" + str(m) + "," + str(k) + "," + str(ov) + ")");
                     }
                   }
                 }
               }});

  r.push_back({"linear-degree-two", {"cycles"},
               "proposition on reduced connected linear hypergraphs of maximum degree two",
               "I <= 2, and I = 1 iff some vertex has degree 1",
               "every such hypergraph on <= 6 vertices up to isomorphism, linear hypercycles on <= 12 "
               "vertices, tight cycles with t = 1, loose paths",
               [](CaseContext& c) {
                 auto one = [&](const Hypergraph& h, const std::string& name) {
                   const auto s = structure(h);
                   if (!s.is_linear || !s.is_reduced || s.max_degree > 2 || !connected_no_isolated(h)) return;
                   c.instance(name, [&] {
                     const std::size_t i = c.number(h);
                     c.check(i <= 2 && (i == 1) == (s.min_degree == 1), name,
                             "I=" + str(i) + " min degree " + str(s.min_degree), &h);
                   });
                 };
                 for (std::size_t n = 1; n <= 6; ++n) {
                   for (const auto& e : antichains(n)) {
                     const Hypergraph h = from_masks(n, e);
                     one(h, show(h));
                   }
                 }
                 for_each_hypercycle(12, [&](const auto& sizes, const auto& overlaps, const std::string& name) {
                   if (std::any_of(overlaps.begin(), overlaps.end(), [](auto o) { return o != 1; })) return;
                   one(hypercycle(sizes, overlaps), name);
                 });
                 for (std::size_t k = 2; k <= 6; ++k) {
                   for (std::size_t n = 3 * (k - 1); n <= 12; n += k - 1) {
                     if (n < k) continue;
                     const TightCycle spec{n, k, 1};
                     one(generate(spec), describe(spec));
                   }
                 }
                 for (std::size_t k = 2; k <= 5; ++k) {
                   for (std::size_t m = 1; m <= 4; ++m) {
                     one(loose_path(m, k, 1), "path(" + str(m) + "," + str(k) + ",1)");
                   }
                 }
               }});

  r.push_back({"interval", {"cycles", "interval"},
               "lemma on reduced interval hypergraphs", "I = number of components",
               "50 seeded random reduced interval hypergraphs with 1 <= n <= 10", [](CaseContext& c) {
                 for (std::size_t i = 0; i < 50; ++i) {
                   const Hypergraph h = random_interval(c.rng(), uniform_between(c.rng(), 1, 10));
                   const std::string name = show(h);
                   c.instance(name, [&] { c.check_eq(name, c.number(h), components(h).size(), &h); });
                 }
               }});

  r.push_back({"hypercycle", {"cycles"}, "proposition on hypercycles",
               "I <= 2, and I = 1 iff some vertex has degree 1",
               "every hypercycle with >= 3 edges, overlaps >= 1 and <= 12 vertices", [](CaseContext& c) {
                 for_each_hypercycle(12, [&](const auto& sizes, const auto& overlaps, const std::string& name) {
                   const Hypergraph h = hypercycle(sizes, overlaps);
                   c.instance(name, [&] {
                     const std::size_t i = c.number(h);
                     const std::size_t d = structure(h).min_degree;
                     c.check(i <= 2 && (i == 1) == (d == 1), name, "I=" + str(i) + " min degree " + str(d), &h);
                   });
                 });
               }});

  r.push_back({"tight-cycle-pair-coverage", {"cycles", "tight"},
               "lemma that every pair lies in two edges of a short (k-1)-tight cycle",
               "every vertex pair lies in >= 2 edges when k + 1 <= n < 2k - 1",
               "3 <= k <= 8", [](CaseContext& c) {
                 for (std::size_t k = 3; k <= 8; ++k) {
                   for (std::size_t n = k + 1; n < 2 * k - 1; ++n) {
                     const TightCycle spec{n, k, k - 1};
                     const Hypergraph h = generate(spec);
                     std::size_t worst = h.edge_count();
                     for (Vertex a = 0; a < n; ++a) {
                       for (Vertex b = a + 1; b < n; ++b) worst = std::min(worst, degree(h, VertexSet{a, b}));
                     }
                     c.check(worst >= 2, describe(spec), "least pair degree " + str(worst), &h);
                   }
                 }
               }});

  r.push_back({"tight-cycle-case-1", {"cycles", "tight"},
               "lemma on (k-1)-tight cycles, long case", "I = 2 when n >= 2k - 1",
               "k in {3,4,5}, k <= n <= min(2k+2, 10)", [](CaseContext& c) { tight_cycle_lemma(c, 1); }});
  r.push_back({"tight-cycle-case-2", {"cycles", "tight"},
               "lemma on (k-1)-tight cycles, middle case",
               "I = min(i + 1, n - k + 1) with i = ceil((k-1)/(n-k)) when k < n < 2k - 1",
               "k in {3,4,5}, k <= n <= min(2k+2, 10)", [](CaseContext& c) { tight_cycle_lemma(c, 2); }});
  r.push_back({"tight-cycle-case-3", {"cycles", "tight"},
               "lemma on (k-1)-tight cycles, single edge case", "I = 1 when n = k",
               "k in {3,4,5}", [](CaseContext& c) { tight_cycle_lemma(c, 3); }});

  r.push_back({"tight-cycle-k-plus-one", {"cycles", "tight"},
               "proposition on t-tight cycles with k + 1 vertices", "I = (k+1)/(k-t) - 1",
               "2 <= k <= 8, 1 <= t < k, (k - t) divides k + 1", [](CaseContext& c) {
                 for (std::size_t k = 2; k <= 8; ++k) {
                   for (std::size_t t = 1; t < k; ++t) {
                     if ((k + 1) % (k - t) != 0) continue;
                     const TightCycle spec{k + 1, k, t};
                     const Hypergraph h = generate(spec);
                     const std::string name = describe(spec);
                     c.instance(name, [&] { c.check_eq(name, c.number(h), (k + 1) / (k - t) - 1, &h); });
                   }
                 }
               }});

  r.push_back({"symmetric-design", {"design"},
               "proposition on symmetric 2-(k^2-k+1, k, 1) designs", "I = 3 for k >= 3",
               "projective planes of order 2, 3, 5", [](CaseContext& c) {
                 for (std::size_t q : {2, 3, 5}) {
                   const Hypergraph h = pg_design(2, q);
                   const std::string name = "pg(2," + str(q) + ")";
                   const auto d = is_t_design(h, 2);
                   const std::size_t k = q + 1;
                   c.check(d.is_design && d.lambda == 1 && h.vertex_count() == k * k - k + 1, name,
                           "symmetric 2-design with lambda 1", &h);
                   c.instance(name, [&] { c.check_eq(name, c.number(h), 3, &h); });
                 }
               }});

  r.push_back({"derived-subdesign", {"design"},
               "theorem on derived sets of t-(n,k,1) designs",
               "every derived set induces an edgeless hypergraph, a single edge, or a t-design",
               "pg(2,2), pg(2,3), pg(3,2), ag(2,3), the 3-(8,4,1) design; every seed of size <= 4",
               [](CaseContext& c) {
                 for (const auto& d : design_pool()) {
                   std::size_t designs = 0;
                   std::size_t bad = 0;
                   std::string first;
                   for_each_small_subset(d.h.vertex_count(), 4, [&](const VertexSet& w) {
                     const auto res = derived_subdesign_check(d.h, w, d.t);
                     if (res.verdict == SubdesignVerdict::Violation) {
                       if (bad++ == 0) first = w.to_string();
                     }
                     if (res.verdict == SubdesignVerdict::Design && res.derived != d.h.vertices()) ++designs;
                   });
                   c.check(bad == 0, d.name, bad ? "violation at seed " + first : "no violation", &d.h);
                   c.note(d.name + ": " + str(designs) + " seeds derive a proper sub-design");
                 }
               }});

  r.push_back({"design-corollary", {"design"},
               "corollary for designs with no non-trivial sub-design", "I = t + 1",
               "designs where no seed of size <= t+1 derives a proper sub-design: pg(2,2), pg(2,3), "
               "pg(2,5), ag(2,3), the 3-(8,4,1) design",
               [](CaseContext& c) {
                 auto pool = design_pool();
                 pool.push_back({"pg(2,5)", pg_design(2, 5), 2});
                 for (const auto& d : pool) {
                   bool sub = false;
                   for_each_small_subset(d.h.vertex_count(), d.t + 1, [&](const VertexSet& w) {
                     const auto res = derived_subdesign_check(d.h, w, d.t);
                     sub = sub || (res.verdict == SubdesignVerdict::Design && res.derived != d.h.vertices());
                   });
                   if (sub) {
                     c.note(d.name + ": has a proper sub-design, not applicable");
                     continue;
                   }
                   c.instance(d.name, [&] { c.check_eq(d.name, c.number(d.h), d.t + 1, &d.h); });
                 }
               }});

  r.push_back({"projective-space", {"design"}, "proposition on the lines of PG(n,q)",
               "I = n + 1", "(n,q) in {(2,2),(2,3),(2,5),(3,2),(3,3),(4,2)}", [](CaseContext& c) {
                 const std::vector<std::pair<std::size_t, std::size_t>> params = {
                     {2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}, {4, 2}};
                 for (auto [n, q] : params) {
                   const ProjectiveSpace ps = projective_space(n, q);
                   const std::string name = "pg(" + str(n) + "," + str(q) + ")";
                   std::size_t points = 1;
                   for (std::size_t i = 0; i < n; ++i) points = points * q + 1;
                   const auto d = is_t_design(ps.design, 2);
                   c.check(ps.design.vertex_count() == points && d.is_design && d.lambda == 1, name,
                           str(points) + " points, 2-design with lambda 1", &ps.design);
                   c.instance(name, [&] { c.check_eq(name, c.number(ps.design), n + 1, &ps.design); });
                 }
               }});

  r.push_back({"design-block-count", {"design"},
               "lemma counting blocks through an s-set of a t-(n,k,1) design",
               "C(n-s, t-s) / C(k-s, t-s) blocks through every s-set, s <= t",
               "pg(2,2), pg(2,3), pg(3,2), pg(2,5), ag(2,3), the 3-(8,4,1) design", [](CaseContext& c) {
                 auto pool = design_pool();
                 pool.push_back({"pg(2,5)", pg_design(2, 5), 2});
                 for (const auto& d : pool) {
                   const std::size_t n = d.h.vertex_count();
                   const std::size_t k = d.h.edge(0).size();
                   c.check_eq(d.name + " s=0", d.h.edge_count(), design_block_count(n, k, d.t, 0), &d.h);
                   for (std::size_t s = 1; s <= d.t; ++s) {
                     const std::size_t want = design_block_count(n, k, d.t, s);
                     bool ok = true;
                     std::vector<std::uint32_t> comb = unrank_combination(0, static_cast<std::uint32_t>(n),
                                                                          static_cast<std::uint32_t>(s));
                     do {
                       VertexSet w;
                       for (auto v : comb) w.insert(v);
                       ok = ok && degree(d.h, w) == want;
                     } while (ok && next_combination(comb, static_cast<std::uint32_t>(n)));
                     c.check(ok, d.name + " s=" + str(s), "every s-set in " + str(want) + " blocks", &d.h);
                   }
                 }
               }});

  r.push_back({"direct-product-complete", {"product", "direct"},
               "theorem on direct products of complete hypergraphs with a large factor",
               "I = sum (n_i - k_i) when some n_i >= 2 k_i",
               ">= 2 factors, 1 <= k_i <= n_i, total vertices <= 10",
               [](CaseContext& c) { direct_product_regime(c, true); }});
  r.push_back({"direct-product-complete-small", {"product", "direct"},
               "lemma on direct products of complete hypergraphs with only small factors",
               "I = 1 + sum (n_i - k_i) when every n_i < 2 k_i",
               ">= 2 factors, 1 <= k_i <= n_i, total vertices <= 10",
               [](CaseContext& c) { direct_product_regime(c, false); }});

  r.push_back({"join-example", {"product", "join"},
               "worked example of adding one vertex to every edge",
               "two disjoint pairs: I drops from 2 to 1", "the single example", [](CaseContext& c) {
                 const Hypergraph h = graph(4, {{0, 1}, {2, 3}});
                 const Hypergraph j = join_universal_vertex(h).graph;
                 c.instance("pairs", [&] {
                   c.check_eq("H", c.number(h), 2, &h);
                   c.check_eq("H x H_1^1", c.number(j), 1, &j);
                 });
               }});

  r.push_back({"join-sandwich", {"product", "join"},
               "theorem on adding one vertex to every edge, bounds part",
               "I(H) - 1 <= I(H x H_1^1) <= I(H)",
               "every reduced non-trivial hypergraph on <= 6 vertices up to isomorphism, plus "
               "random unreduced ones with n <= 7",
               [](CaseContext& c) {
                 auto one = [&](const Hypergraph& h) {
                   if (h.is_trivial()) return;
                   const Hypergraph j = join_universal_vertex(h).graph;
                   const std::string name = show(h);
                   c.instance(name, [&] {
                     const std::size_t a = c.number(h);
                     const std::size_t b = c.number(j);
                     c.check(a <= b + 1 && b <= a, name, "I(H)=" + str(a) + " I(join)=" + str(b), &h);
                   });
                 };
                 for (std::size_t n = 1; n <= 6; ++n) {
                   for (const auto& e : antichains(n)) one(from_masks(n, e));
                 }
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   one(random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 7), 6, 4));
                 }
               }});

  r.push_back({"join-characterization", {"product", "join"},
               "theorem on adding one vertex to every edge, equality part",
               "I(H x H_1^1) = I(H) - 1 iff H is disconnected and has a single-edge component",
               "every reduced hypergraph on <= 6 vertices without isolated vertices, up to isomorphism",
               [](CaseContext& c) {
                 for (std::size_t n = 1; n <= 6; ++n) {
                   for (const auto& e : antichains(n)) {
                     const Hypergraph h = from_masks(n, e);
                     if (has_isolated(h)) continue;
                     const Hypergraph j = join_universal_vertex(h).graph;
                     const std::string name = show(h);
                     c.instance(name, [&] {
                       const auto comps = components(h);
                       const bool single = std::any_of(comps.begin(), comps.end(), [](const Relabeled& r) {
                         return r.graph.edge_count() == 1;
                       });
                       const bool predicted = comps.size() > 1 && single;
                       const std::size_t a = c.number(h);
                       const std::size_t b = c.number(j);
                       c.check((b + 1 == a) == predicted, name,
                               "I(H)=" + str(a) + " I(join)=" + str(b) + " predicted drop " +
                                   (predicted ? "yes" : "no"),
                               &h);
                     });
                   }
                 }
               }});

  r.push_back({"direct-product-sum-bound", {"product", "direct", "inequality"},
               "lemma bounding a direct product by its factors", "I(H1 x H2) <= I(H1) + I(H2)",
               "random non-trivial pairs with 1..5 vertices each", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph a = random_nontrivial(c.rng(), 1, 5, 4, 3);
                   const Hypergraph b = random_nontrivial(c.rng(), 1, 5, 4, 3);
                   const Hypergraph p = direct_product(a, b).graph;
                   const std::string name = show(a) + " x " + show(b);
                   c.instance(name, [&] { c.check_le(name, c.number(p), c.number(a) + c.number(b), &p); });
                 }
               }});

  r.push_back({"direct-product-infection-one", {"product", "direct"},
               "lemma on direct products of factors with infection number one",
               "both factors with >= 2 edges and I = 1 give I = 2",
               "all pairs from a pool of paths, flowers, intervals, hypercycles and an extension",
               [](CaseContext& c) {
                 std::vector<std::pair<std::string, Hypergraph>> pool = {
                     {"P3", graph(3, {{0, 1}, {1, 2}})},
                     {"P4", graph(4, {{0, 1}, {1, 2}, {2, 3}})},
                     {"flower(1;1,1)", flower(1, {1, 1})},
                     {"flower(2;1,2)", flower(2, {1, 2})},
                     {"interval(5;1+3,3+3)", interval(5, {{1, 3}, {3, 3}})},
                     {"hypercycle(o=1,1,1,p=1,1,1)", hypercycle({3, 3, 3}, {1, 1, 1})},
                     {"extension of complete(4,3)", infection_one_extension(complete(4, 3))}};
                 for (const auto& [name, h] : pool) {
                   c.instance(name, [&] { c.check_eq(name + " has I=1", c.number(h), 1, &h); });
                 }
                 for (std::size_t i = 0; i < pool.size(); ++i) {
                   for (std::size_t j = i; j < pool.size(); ++j) {
                     const Hypergraph p = direct_product(pool[i].second, pool[j].second).graph;
                     const std::string name = pool[i].first + " x " + pool[j].first;
                     c.instance(name, [&] { c.check_eq(name, c.number(p), 2, &p); });
                   }
                 }
               }});

  r.push_back({"weak-corona-bound", {"product", "corona", "inequality"},
               "theorem bounding the weak corona", "I(G o_w H) <= |V(G)| I(H)",
               "random k-uniform G and (k-1)-uniform H, k in {2,3}, at most 12 vertices in total",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const std::size_t k = uniform_between(c.rng(), 2, 3);
                   const std::size_t ng = uniform_between(c.rng(), k, 4);
                   const std::size_t nh = uniform_between(c.rng(), k - 1, std::min<std::size_t>(3, 12 / ng - 1));
                   const Hypergraph g = random_uniform(c.rng(), ng, k, uniform_between(c.rng(), 1, 3));
                   const Hypergraph h = random_uniform(c.rng(), nh, k - 1, uniform_between(c.rng(), 1, 3));
                   const Hypergraph w = weak_corona(g, h).graph;
                   const std::string name = show(g) + " o_w " + show(h);
                   c.instance(name, [&] { c.check_le(name, c.number(w), ng * c.number(h), &w); });
                 }
               }});

  r.push_back({"strong-corona-bound", {"product", "corona", "inequality"},
               "theorem bounding the strong corona",
               "I(G o_s H) <= I(G) |V(H)| + (|V(G)| - I(G)) I(H)",
               "random k-uniform G and H, k in {2,3}, at most 12 vertices in total", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const std::size_t k = uniform_between(c.rng(), 2, 3);
                   const std::size_t nh = uniform_between(c.rng(), k, 3);
                   const std::size_t ng = uniform_between(c.rng(), k, std::max(k, std::min<std::size_t>(4, 12 / (nh + 1))));
                   const Hypergraph g = random_uniform(c.rng(), ng, k, uniform_between(c.rng(), 1, 3));
                   const Hypergraph h = random_uniform(c.rng(), nh, k, uniform_between(c.rng(), 1, 3));
                   const Hypergraph s = strong_corona(g, h).graph;
                   const std::string name = show(g) + " o_s " + show(h);
                   c.instance(name, [&] {
                     const std::size_t ig = c.number(g);
                     c.check_le(name, c.number(s), ig * nh + (ng - ig) * c.number(h), &s);
                   });
                 }
               }});

  r.push_back({"strong-corona-edge-count", {"product", "count"},
               "edge count stated with the strong corona definition",
               "|E(G)| + |V(G)| |E(H)| (k+1) edges generated, |V(G)| + |V(G)| |V(H)| vertices",
               "random k-uniform G and H with k in 2..4 and up to 6 vertices each", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const std::size_t k = uniform_between(c.rng(), 2, 4);
                   const Hypergraph g = random_uniform(c.rng(), uniform_between(c.rng(), k, 6), k,
                                                       uniform_between(c.rng(), 1, 4));
                   const Hypergraph h = random_uniform(c.rng(), uniform_between(c.rng(), k, 6), k,
                                                       uniform_between(c.rng(), 1, 4));
                   const ProductResult s = strong_corona(g, h);
                   const std::size_t ng = g.vertex_count();
                   const std::size_t want = g.edge_count() + ng * h.edge_count() * (k + 1);
                   const std::string name = show(g) + " o_s " + show(h);
                   c.check(s.raw_edge_count == want && s.graph.edge_count() <= want &&
                               s.graph.vertex_count() == ng + ng * h.vertex_count(),
                           name, "raw " + str(s.raw_edge_count) + " expected " + str(want), &s.graph);
                 }
               }});

  r.push_back({"m-monotone", {"infection", "m", "inequality"},
               "remark that raising m never helps", "I_m <= I_{m+1}",
               "random hypergraphs with n <= 8, m in {1,2,3}", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 8), 8, 5);
                   const std::string name = show(h);
                   c.instance(name, [&] {
                     const std::size_t a = c.number(h, 1), b = c.number(h, 2), d = c.number(h, 3);
                     c.check(a <= b && b <= d, name, str(a) + " <= " + str(b) + " <= " + str(d), &h);
                   });
                 }
               }});

  r.push_back({"m-chain", {"infection", "m", "inequality"},
               "lemma relating consecutive m-infection numbers", "I_{m+1} <= I_m + |E|",
               "random hypergraphs with n <= 8, m in {1,2}", [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph h = random_hypergraph(c.rng(), uniform_between(c.rng(), 1, 8), 8, 5);
                   const std::string name = show(h);
                   c.instance(name, [&] {
                     for (int m = 1; m <= 2; ++m) {
                       c.check_le(name + " m=" + str(m), c.number(h, m + 1), c.number(h, m) + h.edge_count(), &h);
                     }
                   });
                 }
               }});

  r.push_back({"m-single-edge", {"infection", "m"},
               "tightness remark for the m-infection lemma", "a single edge of size >= 2 has I_2 = I_1 + 1 = 2",
               "single edges of size 2..6 on exactly their vertices", [](CaseContext& c) {
                 for (std::size_t s = 2; s <= 6; ++s) {
                   const Hypergraph h = complete(s, s);
                   const std::string name = "edge of size " + str(s);
                   c.instance(name, [&] {
                     const std::size_t a = c.number(h, 1);
                     c.check_eq(name + " I_1", a, 1, &h);
                     c.check_eq(name + " I_2", c.number(h, 2), a + h.edge_count(), &h);
                   });
                 }
               }});

  r.push_back({"cartesian-bound", {"product", "cartesian", "inequality"},
               "theorem bounding the Cartesian product by a 2-infection number",
               "I(G [] H) <= I(G) I_2(H)", "random pairs with 2..4 vertices each, product <= 12 vertices",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph g = random_nontrivial(c.rng(), 2, 4, 3, 3);
                   const std::size_t top = std::max<std::size_t>(2, std::min<std::size_t>(4, 12 / g.vertex_count()));
                   const Hypergraph h = random_nontrivial(c.rng(), 2, top, 3, 3);
                   const Hypergraph p = cartesian_product(g, h).graph;
                   const std::string name = show(g) + " [] " + show(h);
                   c.instance(name, [&] { c.check_le(name, c.number(p), c.number(g) * c.number(h, 2), &p); });
                 }
               }});

  r.push_back({"cartesian-corollary", {"product", "cartesian", "inequality"},
               "corollary of the Cartesian bound without 2-infection",
               "I(G [] H) <= I(G) (I(H) + |E(H)|), with equality for two single edges",
               "random pairs with 2..4 vertices each, product <= 12 vertices; single edges of size 2..3",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph g = random_nontrivial(c.rng(), 2, 4, 3, 3);
                   const std::size_t top = std::max<std::size_t>(2, std::min<std::size_t>(4, 12 / g.vertex_count()));
                   const Hypergraph h = random_nontrivial(c.rng(), 2, top, 3, 3);
                   const Hypergraph p = cartesian_product(g, h).graph;
                   const std::string name = show(g) + " [] " + show(h);
                   c.instance(name, [&] {
                     c.check_le(name, c.number(p), c.number(g) * (c.number(h) + h.edge_count()), &p);
                   });
                 }
                 for (std::size_t a = 2; a <= 3; ++a) {
                   for (std::size_t b = 2; b <= 3; ++b) {
                     const Hypergraph p = cartesian_product(complete(a, a), complete(b, b)).graph;
                     const std::string name = "edge(" + str(a) + ") [] edge(" + str(b) + ")";
                     c.instance(name, [&] { c.check_eq(name, c.number(p), 2, &p); });
                   }
                 }
               }});

  r.push_back({"cartesian-graphs", {"product", "cartesian", "graph"},
               "graph case of the Cartesian bound", "I_2(H) = |V(H)| for graphs, and Z(G [] H) <= Z(G) |V(H)|",
               "random graphs with an edge, 2..4 vertices each; Z by the colour-change rule",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const Hypergraph g = random_graph_with_edge(c.rng(), 2, 4);
                   const Hypergraph h = random_graph_with_edge(c.rng(), 2, 4);
                   const Hypergraph p = cartesian_product(g, h).graph;
                   const std::string name = show(g) + " [] " + show(h);
                   c.instance(name, [&] { c.check_eq(name + " I_2(H)", c.number(h, 2), h.vertex_count(), &h); });
                   c.check_le(name, zero_forcing_oracle(p), zero_forcing_oracle(g) * h.vertex_count(), &p);
                 }
               }});

  r.push_back({"adjacency-hypergraph", {"line-graph", "invariance"},
               "lemma on adjacency hypergraphs of connected graphs", "I = 2",
               "every connected simple graph on 3..7 vertices up to isomorphism", [](CaseContext& c) {
                 std::size_t leafy = 0;
                 std::size_t failed_leafy = 0;
                 std::size_t failed = 0;
                 for (std::size_t n = 3; n <= 7; ++n) {
                   for (const auto& g : connected_graphs(n)) {
                     const Hypergraph h = adjacency_hypergraph(g);
                     const bool leaf = structure(g).min_degree == 1;
                     leafy += leaf ? 1 : 0;
                     const std::string name = "adjacency of " + show(g);
                     c.instance(name, [&] {
                       const std::size_t i = c.number(h);
                       if (i != 2) {
                         ++failed;
                         failed_leafy += leaf ? 1 : 0;
                       }
                       c.check_eq(name, i, 2, &h);
                     });
                   }
                 }
                 c.note(str(failed) + " graphs off the value, " + str(failed_leafy) + " of them with a leaf; " +
                        str(leafy) + " graphs have a leaf");
               }});

  r.push_back({"line-graph-bound", {"line-graph", "inequality"},
               "lemma bounding I by the zero forcing number of the line graph", "I(H) <= k Z(L(H))",
               "random k-uniform H without isolated vertices, k in 2..4, n <= 8; Z by the colour-change rule",
               [](CaseContext& c) {
                 for (std::size_t i = 0; i < c.count(); ++i) {
                   const std::size_t k = uniform_between(c.rng(), 2, 4);
                   const std::size_t n = uniform_between(c.rng(), k, 8);
                   const Hypergraph h = random_uniform(c.rng(), n, k, uniform_between(c.rng(), 1, 5), true);
                   const std::string name = show(h);
                   c.instance(name, [&] { c.check_le(name, c.number(h), k * zero_forcing_oracle(line_graph(h)), &h); });
                 }
               }});

  r.push_back({"hypertree-example", {"fixture"},
               "worked example of a hypertree with its host tree",
               "I(H) = 3 with {1,2,3} infecting, and Z(host tree) = 2 with {1,3} forcing",
               "the single example", [](CaseContext& c) {
                 const Hypergraph h = graph(6, {{0, 4, 5}, {1, 4, 5}, {2, 4, 5}, {3, 4, 5}});
                 const Hypergraph tree = graph(6, {{0, 4}, {1, 4}, {4, 5}, {2, 5}, {3, 5}});
                 c.instance("hypertree", [&] {
                   c.check_eq("hypertree", c.number(h), 3, &h);
                   c.check(is_infection_set(h, VertexSet{0, 1, 2}), "hypertree", "{1,2,3} infects", &h);
                   c.check_eq("host tree", c.number(tree), 2, &tree);
                   c.check_eq("host tree oracle", zero_forcing_oracle(tree), 2, &tree);
                   c.check(is_infection_set(tree, VertexSet{0, 2}), "host tree", "{1,3} forces", &tree);
                 });
               }});

  return r;
}

}  // namespace

const std::vector<TheoremCase>& theorem_registry() {
  static const std::vector<TheoremCase> registry = build_registry();
  return registry;
}

}  // namespace hyperinfect
