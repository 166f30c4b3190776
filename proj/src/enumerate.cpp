#include "hyperinfect/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "hyperinfect/error.hpp"

namespace hyperinfect {
namespace {

std::uint32_t remap(std::uint32_t mask, const std::vector<std::uint32_t>& label) {
  std::uint32_t out = 0;
  for (; mask != 0; mask &= mask - 1) out |= 1U << label[std::countr_zero(mask)];
  return out;
}

bool degrees_non_increasing(const std::vector<int>& deg) {
  for (std::size_t i = 1; i < deg.size(); ++i) {
    if (deg[i] > deg[i - 1]) return false;
  }
  return true;
}

VertexSet random_subset(Rng& rng, std::size_t n, std::size_t size) {
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  VertexSet out;
  for (std::size_t i = 0; i < size; ++i) {
    const std::size_t j = i + uniform_below(rng, n - i);
    std::swap(pool[i], pool[j]);
    out.insert(pool[i]);
  }
  return out;
}

}  // namespace

Hypergraph from_masks(std::size_t n, const EdgeMasks& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (auto m : edges) {
    VertexSet e;
    for (; m != 0; m &= m - 1) e.insert(static_cast<Vertex>(std::countr_zero(m)));
    sets.push_back(std::move(e));
  }
  return Hypergraph::build(n, std::move(sets));
}

EdgeMasks to_masks(const Hypergraph& h) {
  if (h.vertex_count() > 32) throw InvalidInput("to_masks needs at most 32 vertices");
  EdgeMasks out;
  for (const auto& e : h.edges()) {
    std::uint32_t m = 0;
    for (Vertex v : e) m |= 1U << v;
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

EdgeMasks canonical_form(std::size_t n, EdgeMasks edges) {
  std::vector<int> deg(n, 0);
  for (auto m : edges) {
    for (; m != 0; m &= m - 1) ++deg[std::countr_zero(m)];
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0U);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::uint32_t a, std::uint32_t b) { return deg[a] > deg[b]; });
  // segments of equal degree in `order`
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  for (auto [a, b] : groups) std::sort(order.begin() + a, order.begin() + b);

  EdgeMasks best;
  std::vector<std::uint32_t> label(n);
  EdgeMasks mapped(edges.size());
  bool first = true;
  while (true) {
    for (std::size_t i = 0; i < n; ++i) label[order[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t e = 0; e < edges.size(); ++e) mapped[e] = remap(edges[e], label);
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = mapped;
      first = false;
    }
    // odometer over the per-group permutations
    std::size_t g = groups.size();
    while (g > 0) {
      auto [a, b] = groups[g - 1];
      if (std::next_permutation(order.begin() + a, order.begin() + b)) break;
      --g;
    }
    if (g == 0) break;
  }
  return best;
}

void for_each_class(std::size_t n, const std::vector<std::uint32_t>& candidates,
                    const std::function<void(const EdgeMasks&)>& fn) {
  const std::size_t c = candidates.size();
  if (c > 24) throw InvalidInput("for_each_class supports at most 24 candidate edges");
  std::set<EdgeMasks> seen;
  std::vector<int> deg(n);
  EdgeMasks edges;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << c); ++pick) {
    std::fill(deg.begin(), deg.end(), 0);
    edges.clear();
    for (std::uint64_t p = pick; p != 0; p &= p - 1) {
      std::uint32_t m = candidates[std::countr_zero(p)];
      edges.push_back(m);
      for (; m != 0; m &= m - 1) ++deg[std::countr_zero(m)];
    }
    if (!degrees_non_increasing(deg)) continue;
    EdgeMasks canon = canonical_form(n, edges);
    if (seen.insert(canon).second) fn(canon);
  }
}

std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) == k) out.push_back(m);
  }
  // numeric order is not lexicographic on members; sort by member sequence
  std::sort(out.begin(), out.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
      const int x = std::countr_zero(a);
      const int y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  return out;
}

std::vector<EdgeMasks> antichain_classes(std::size_t n) {
  if (n < 1 || n > 6) throw InvalidInput("antichain_classes supports 1..6 vertices");
  const std::uint32_t limit = 1U << n;
  std::set<EdgeMasks> seen;
  std::vector<EdgeMasks> out;
  EdgeMasks chosen;
  std::vector<int> deg(n, 0);

  // Depth-first over antichains, adding subsets in increasing numeric order.
  // A later (larger) subset can never be contained in an earlier one.
  std::function<void(std::uint32_t)> grow = [&](std::uint32_t from) {
    for (std::uint32_t s = from; s < limit; ++s) {
      bool ok = true;
      for (auto t : chosen) {
        if ((t & ~s) == 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen.push_back(s);
      for (std::uint32_t m = s; m != 0; m &= m - 1) ++deg[std::countr_zero(m)];
      if (degrees_non_increasing(deg)) {
        EdgeMasks canon = canonical_form(n, chosen);
        if (seen.insert(canon).second) out.push_back(std::move(canon));
      }
      grow(s + 1);
      for (std::uint32_t m = s; m != 0; m &= m - 1) --deg[std::countr_zero(m)];
      chosen.pop_back();
    }
  };
  grow(1);
  return out;
}

bool edges_connected(const Hypergraph& h) {
  std::size_t with_edges = 0;
  for (const auto& c : components(h)) {
    if (!c.graph.is_trivial()) ++with_edges;
  }
  return with_edges == 1;
}

std::vector<Hypergraph> connected_graphs(std::size_t n) {
  if (n < 1 || n > 7) throw InvalidInput("connected_graphs supports 1..7 vertices");
  std::vector<Hypergraph> out;
  if (n == 1) {
    out.push_back(Hypergraph::build(1, std::vector<VertexSet>{}));
    return out;
  }
  for_each_class(n, subsets_of_size(n, 2), [&](const EdgeMasks& edges) {
    Hypergraph g = from_masks(n, edges);
    if (structure(g).min_degree > 0 && edges_connected(g)) out.push_back(std::move(g));
  });
  return out;
}

std::size_t uniform_below(Rng& rng, std::size_t bound) {
  return static_cast<std::size_t>(rng() % bound);
}

std::size_t uniform_between(Rng& rng, std::size_t lo, std::size_t hi) {
  return lo + uniform_below(rng, hi - lo + 1);
}

Hypergraph random_hypergraph(Rng& rng, std::size_t n, std::size_t max_edges,
                             std::size_t max_edge_size) {
  const std::size_t count = uniform_between(rng, 0, max_edges);
  const std::size_t top = std::min(n, max_edge_size);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < count; ++i) {
    edges.push_back(random_subset(rng, n, uniform_between(rng, 1, top)));
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph random_uniform(Rng& rng, std::size_t n, std::size_t k, std::size_t edges, bool cover) {
  if (k < 1 || k > n) throw InvalidInput("random_uniform needs 1 <= k <= n");
  std::vector<VertexSet> out;
  VertexSet covered;
  for (std::size_t i = 0; i < edges; ++i) {
    out.push_back(random_subset(rng, n, k));
    covered |= out.back();
  }
  if (cover) {
    for (Vertex v = 0; v < n; ++v) {
      if (covered.contains(v)) continue;
      VertexSet e{v};
      while (e.size() < k) e.insert(static_cast<Vertex>(uniform_below(rng, n)));
      covered |= e;
      out.push_back(std::move(e));
    }
  }
  return Hypergraph::build(n, std::move(out));
}

Hypergraph random_graph(Rng& rng, std::size_t n) {
  std::vector<VertexSet> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng() & 1U) edges.push_back(VertexSet{a, b});
    }
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph random_interval(Rng& rng, std::size_t n) {
  const std::size_t count = uniform_between(rng, 1, n);
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t start = uniform_below(rng, n);
    const std::size_t len = uniform_between(rng, 1, n - start);
    VertexSet e;
    for (std::size_t v = start; v < start + len; ++v) e.insert(static_cast<Vertex>(v));
    edges.push_back(std::move(e));
  }
  return reduce(Hypergraph::build(n, std::move(edges)));
}

}  // namespace hyperinfect
