#include "hyperinfect/products.hpp"

#include "hyperinfect/error.hpp"

namespace hyperinfect {
namespace {

constexpr std::size_t kMaxEdges = std::size_t{1} << 22;

std::size_t uniformity(const Hypergraph& h, const char* what) {
  const auto r = structure(h);
  if (h.is_trivial() || !r.uniform_size) {
    throw InvalidInput(std::string(what) + " needs uniform hypergraphs with at least one edge");
  }
  return *r.uniform_size;
}

VertexSet shifted(const VertexSet& e, std::size_t offset) {
  VertexSet out;
  for (Vertex v : e) out.insert(static_cast<Vertex>(v + offset));
  return out;
}

// Copies of h hung on every vertex of g; joiner(edges, copy_edge, gv) adds
// the edges that attach one copy edge to gv.
template <typename Joiner>
ProductResult corona(const Hypergraph& g, const Hypergraph& h, Joiner joiner) {
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  ProductResult out{g, {}, 0};
  std::vector<VertexSet> edges = g.edges();
  out.origin.reserve(ng * (1 + nh));
  for (Vertex v = 0; v < ng; ++v) out.origin.push_back({0, v, 0});
  for (Vertex gv = 0; gv < ng; ++gv) {
    const std::size_t offset = ng + gv * nh;
    for (Vertex v = 0; v < nh; ++v) out.origin.push_back({1 + gv, v, 0});
    for (const auto& e : h.edges()) joiner(edges, shifted(e, offset), gv);
  }
  out.raw_edge_count = edges.size();
  out.graph = Hypergraph::build(ng * (1 + nh), std::move(edges));
  return out;
}

void add_strong_join_edges(std::vector<VertexSet>& edges, const VertexSet& e, Vertex v) {
  edges.push_back(e);
  for (Vertex drop : e) {
    VertexSet f = e;
    f.erase(drop);
    f.insert(v);
    edges.push_back(std::move(f));
  }
}

}  // namespace

ProductResult direct_product(const std::vector<Hypergraph>& factors) {
  if (factors.empty()) throw InvalidInput("direct product needs at least one factor");
  std::size_t count = 1;
  std::vector<std::size_t> offset;
  std::size_t n = 0;
  std::vector<VertexOrigin> origin;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (factors[i].is_trivial()) throw InvalidInput("direct product: factor without edges");
    count *= factors[i].edge_count();
    if (count > kMaxEdges) throw InvalidInput("direct product: too many edges");
    offset.push_back(n);
    for (Vertex v = 0; v < factors[i].vertex_count(); ++v) origin.push_back({i, v, 0});
    n += factors[i].vertex_count();
  }
  std::vector<VertexSet> edges;
  std::vector<std::size_t> pick(factors.size(), 0);
  while (true) {
    VertexSet e;
    for (std::size_t i = 0; i < factors.size(); ++i) e |= shifted(factors[i].edge(pick[i]), offset[i]);
    edges.push_back(std::move(e));
    std::size_t i = factors.size();
    while (i > 0 && ++pick[i - 1] == factors[i - 1].edge_count()) pick[--i] = 0;
    if (i == 0) break;
  }
  const std::size_t raw = edges.size();
  return {Hypergraph::build(n, std::move(edges)), std::move(origin), raw};
}

ProductResult direct_product(const Hypergraph& a, const Hypergraph& b) {
  return direct_product(std::vector<Hypergraph>{a, b});
}

ProductResult join_universal_vertex(const Hypergraph& h) {
  if (h.is_trivial()) throw InvalidInput("join needs a hypergraph with at least one edge");
  const auto v = static_cast<Vertex>(h.vertex_count());
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) {
    VertexSet f = e;
    f.insert(v);
    edges.push_back(std::move(f));
  }
  std::vector<VertexOrigin> origin;
  for (Vertex u = 0; u < v; ++u) origin.push_back({0, u, 0});
  origin.push_back({1, 0, 0});
  return {Hypergraph::build(h.vertex_count() + 1, std::move(edges)), std::move(origin),
          h.edge_count()};
}

ProductResult weak_corona(const Hypergraph& g, const Hypergraph& h) {
  const std::size_t kg = uniformity(g, "weak corona");
  const std::size_t kh = uniformity(h, "weak corona");
  if (kg != kh + 1) throw InvalidInput("weak corona: H must be (k-1)-uniform for k-uniform G");
  return corona(g, h, [](std::vector<VertexSet>& edges, VertexSet e, Vertex gv) {
    e.insert(gv);
    edges.push_back(std::move(e));
  });
}

ProductResult strong_join(const Hypergraph& h) {
  uniformity(h, "strong join");
  const auto v = static_cast<Vertex>(h.vertex_count());
  std::vector<VertexSet> edges;
  for (const auto& e : h.edges()) add_strong_join_edges(edges, e, v);
  std::vector<VertexOrigin> origin;
  for (Vertex u = 0; u < v; ++u) origin.push_back({0, u, 0});
  origin.push_back({1, 0, 0});
  const std::size_t raw = edges.size();
  return {Hypergraph::build(h.vertex_count() + 1, std::move(edges)), std::move(origin), raw};
}

ProductResult strong_corona(const Hypergraph& g, const Hypergraph& h) {
  const std::size_t kg = uniformity(g, "strong corona");
  const std::size_t kh = uniformity(h, "strong corona");
  if (kg != kh) throw InvalidInput("strong corona: G and H must have the same uniformity");
  return corona(g, h, [](std::vector<VertexSet>& edges, const VertexSet& e, Vertex gv) {
    add_strong_join_edges(edges, e, gv);
  });
}

ProductResult cartesian_product(const Hypergraph& g, const Hypergraph& h) {
  if (g.is_trivial() || h.is_trivial()) {
    throw InvalidInput("Cartesian product: both factors need an edge");
  }
  const std::size_t ng = g.vertex_count();
  const std::size_t nh = h.vertex_count();
  auto pair = [nh](Vertex a, Vertex b) { return static_cast<Vertex>(a * nh + b); };
  std::vector<VertexSet> edges;
  for (const auto& e : g.edges()) {
    for (Vertex b = 0; b < nh; ++b) {
      VertexSet f;
      for (Vertex a : e) f.insert(pair(a, b));
      edges.push_back(std::move(f));
    }
  }
  for (Vertex a = 0; a < ng; ++a) {
    for (const auto& e : h.edges()) {
      VertexSet f;
      for (Vertex b : e) f.insert(pair(a, b));
      edges.push_back(std::move(f));
    }
  }
  std::vector<VertexOrigin> origin;
  for (Vertex a = 0; a < ng; ++a) {
    for (Vertex b = 0; b < nh; ++b) origin.push_back({0, a, b});
  }
  const std::size_t raw = edges.size();
  return {Hypergraph::build(ng * nh, std::move(edges)), std::move(origin), raw};
}

}  // namespace hyperinfect
