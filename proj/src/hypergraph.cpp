#include "hyperinfect/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperinfect/error.hpp"

namespace hyperinfect {
namespace {

bool canonical_less(const VertexSet& a, const VertexSet& b) {
  const auto sa = a.size();
  const auto sb = b.size();
  if (sa != sb) return sa < sb;
  return a < b;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    std::size_t root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const std::size_t next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  // The smaller root wins so every root is the least member of its set.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

void check_subset(const Hypergraph& h, const VertexSet& s, const char* what) {
  if (!s.empty() && s.back() >= h.vertex_count()) {
    throw InvalidInput(std::string(what) + ": vertex out of range");
  }
}

}  // namespace

Hypergraph Hypergraph::build(std::size_t n,
                             const std::vector<std::vector<Vertex>>& edge_lists) {
  std::vector<VertexSet> edges;
  edges.reserve(edge_lists.size());
  for (const auto& list : edge_lists) edges.emplace_back(std::span<const Vertex>(list));
  for (std::size_t i = 0; i < edge_lists.size(); ++i) {
    for (Vertex v : edge_lists[i]) {
      if (v >= n) {
        throw InvalidInput("edge " + std::to_string(i + 1) + " has vertex " +
                           std::to_string(v + 1) + " outside 1.." + std::to_string(n));
      }
    }
  }
  return build(n, std::move(edges));
}

Hypergraph Hypergraph::build(std::size_t n, std::vector<VertexSet> edges) {
  if (n == 0) throw InvalidInput("a hypergraph needs at least one vertex");
  for (const auto& e : edges) {
    if (e.empty()) throw InvalidInput("empty edge");
    if (e.back() >= n) throw InvalidInput("edge vertex out of range");
  }
  std::sort(edges.begin(), edges.end(), canonical_less);
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Hypergraph(n, std::move(edges));
}

std::vector<std::vector<Vertex>> Hypergraph::edge_lists() const {
  std::vector<std::vector<Vertex>> out;
  out.reserve(edges_.size());
  for (const auto& e : edges_) out.push_back(e.members());
  return out;
}

StructureReport structure(const Hypergraph& h) {
  StructureReport r;
  const auto& edges = h.edges();
  if (!edges.empty()) {
    r.min_edge_size = edges.front().size();
    r.max_edge_size = edges.back().size();
    if (r.min_edge_size == r.max_edge_size) r.uniform_size = r.min_edge_size;
    r.has_singleton_edges = r.min_edge_size == 1;
  }
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if ((edges[i] & edges[j]).size() > 1) r.is_linear = false;
      // Canonical order puts any proper superset after its subset.
      if (edges[i].is_subset_of(edges[j])) r.is_reduced = false;
    }
  }
  std::vector<std::size_t> deg(h.vertex_count(), 0);
  for (const auto& e : edges) {
    for (Vertex v : e) ++deg[v];
  }
  r.min_degree = *std::min_element(deg.begin(), deg.end());
  r.max_degree = *std::max_element(deg.begin(), deg.end());
  return r;
}

std::size_t degree(const Hypergraph& h, const VertexSet& subset) {
  if (subset.empty()) throw InvalidInput("degree of the empty set is not defined");
  check_subset(h, subset, "degree");
  return static_cast<std::size_t>(std::count_if(
      h.edges().begin(), h.edges().end(),
      [&](const VertexSet& e) { return subset.is_subset_of(e); }));
}

std::size_t degree(const Hypergraph& h, Vertex v) { return degree(h, VertexSet{v}); }

Hypergraph reduce(const Hypergraph& h) {
  const auto& edges = h.edges();
  std::vector<VertexSet> kept;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    bool contained = false;
    for (std::size_t j = i + 1; j < edges.size() && !contained; ++j) {
      contained = edges[i].is_subset_of(edges[j]);
    }
    if (!contained) kept.push_back(edges[i]);
  }
  return Hypergraph::build(h.vertex_count(), std::move(kept));
}

VertexSet Relabeled::lift(const VertexSet& local) const {
  VertexSet out;
  for (Vertex v : local) out.insert(labels.at(v));
  return out;
}

std::vector<Relabeled> components(const Hypergraph& h) {
  const std::size_t n = h.vertex_count();
  DisjointSets sets(n);
  for (const auto& e : h.edges()) {
    const Vertex first = e.front();
    for (Vertex v : e) sets.unite(first, v);
  }
  std::vector<std::size_t> slot(n, n);
  std::vector<VertexSet> groups;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t root = sets.find(v);
    if (slot[root] == n) {
      slot[root] = groups.size();
      groups.emplace_back();
    }
    groups[slot[root]].insert(v);
  }
  std::vector<Relabeled> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(induced(h, g));
  return out;
}

Relabeled induced(const Hypergraph& h, const VertexSet& subset) {
  if (subset.empty()) throw InvalidInput("induced sub-hypergraph needs a nonempty vertex set");
  check_subset(h, subset, "induced");
  std::vector<Vertex> labels = subset.members();
  std::vector<Vertex> local(h.vertex_count(), 0);
  for (std::size_t i = 0; i < labels.size(); ++i) local[labels[i]] = static_cast<Vertex>(i);
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    if (!e.is_subset_of(subset)) continue;
    VertexSet mapped;
    for (Vertex v : e) mapped.insert(local[v]);
    edges.push_back(std::move(mapped));
  }
  auto graph = Hypergraph::build(labels.size(), std::move(edges));
  return Relabeled{std::move(graph), std::move(labels)};
}

Hypergraph line_graph(const Hypergraph& h) {
  if (h.is_trivial()) throw InvalidInput("line graph of a trivial hypergraph is empty");
  const auto& edges = h.edges();
  std::vector<VertexSet> pairs;
  for (Vertex i = 0; i < edges.size(); ++i) {
    for (Vertex j = i + 1; j < edges.size(); ++j) {
      if (edges[i].intersects(edges[j])) pairs.push_back(VertexSet{i, j});
    }
  }
  return Hypergraph::build(edges.size(), std::move(pairs));
}

Hypergraph adjacency_hypergraph(const Hypergraph& graph) {
  const auto report = structure(graph);
  if (graph.is_trivial() || report.uniform_size != std::size_t{2}) {
    throw InvalidInput("adjacency hypergraph needs a simple graph (2-uniform)");
  }
  if (report.min_degree == 0) {
    throw InvalidInput("adjacency hypergraph needs a graph without isolated vertices");
  }
  std::vector<VertexSet> incident(graph.vertex_count());
  for (Vertex i = 0; i < graph.edge_count(); ++i) {
    for (Vertex v : graph.edge(i)) incident[v].insert(i);
  }
  return Hypergraph::build(graph.edge_count(), std::move(incident));
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
  const auto offset = static_cast<Vertex>(a.vertex_count());
  std::vector<VertexSet> edges = a.edges();
  for (const auto& e : b.edges()) {
    VertexSet shifted;
    for (Vertex v : e) shifted.insert(v + offset);
    edges.push_back(std::move(shifted));
  }
  return Hypergraph::build(a.vertex_count() + b.vertex_count(), std::move(edges));
}

}  // namespace hyperinfect
