#include "hyperinfect/families.hpp"

#include <numeric>
#include <sstream>

#include "hyperinfect/combinatorics.hpp"
#include "hyperinfect/error.hpp"

namespace hyperinfect {
namespace {

// Refuse to materialize absurdly large edge lists.
constexpr std::uint64_t kMaxEdges = std::uint64_t{1} << 22;

void require(bool ok, const std::string& msg) {
  if (!ok) throw InvalidInput(msg);
}

std::string join(const std::vector<std::size_t>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i];
  return os.str();
}

}  // namespace

Hypergraph complete(std::size_t n, std::size_t k) {
  require(k >= 1 && k <= n, "complete: need 1 <= k <= n");
  require(binomial(n, k) <= kMaxEdges, "complete: too many edges");
  std::vector<VertexSet> edges;
  std::vector<std::uint32_t> c = unrank_combination(0, static_cast<std::uint32_t>(n),
                                                    static_cast<std::uint32_t>(k));
  do {
    edges.emplace_back(std::span<const Vertex>(c));
  } while (next_combination(c, static_cast<std::uint32_t>(n)));
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph complete_multipartite(const std::vector<std::size_t>& parts) {
  require(!parts.empty(), "multipartite: need at least one part");
  std::uint64_t count = 1;
  for (auto p : parts) {
    require(p >= 1, "multipartite: every part needs a vertex");
    count *= p;
    require(count <= kMaxEdges, "multipartite: too many edges");
  }
  std::vector<std::size_t> offset(parts.size(), 0);
  std::partial_sum(parts.begin(), parts.end() - 1, offset.begin() + 1);
  const std::size_t n = offset.back() + parts.back();

  std::vector<VertexSet> edges;
  std::vector<std::size_t> pick(parts.size(), 0);
  while (true) {
    VertexSet e;
    for (std::size_t i = 0; i < parts.size(); ++i) e.insert(static_cast<Vertex>(offset[i] + pick[i]));
    edges.push_back(std::move(e));
    std::size_t i = parts.size();
    while (i > 0 && ++pick[i - 1] == parts[i - 1]) pick[--i] = 0;
    if (i == 0) break;
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph flower(std::size_t core_size, const std::vector<std::size_t>& petal_extra_sizes) {
  require(core_size >= 1, "flower: core needs a vertex");
  require(petal_extra_sizes.size() >= 2, "flower: need at least two petals");
  std::size_t next = core_size;
  std::vector<VertexSet> edges;
  for (auto extra : petal_extra_sizes) {
    require(extra >= 1, "flower: every petal needs a private vertex");
    VertexSet e = VertexSet::range(core_size);
    for (std::size_t j = 0; j < extra; ++j) e.insert(static_cast<Vertex>(next++));
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(next, std::move(edges));
}

Hypergraph interval(std::size_t n,
                    const std::vector<std::pair<std::size_t, std::size_t>>& intervals) {
  require(n >= 1, "interval: need n >= 1");
  std::vector<VertexSet> edges;
  for (auto [start, len] : intervals) {
    require(start >= 1 && len >= 1 && start + len - 1 <= n,
            "interval: " + std::to_string(start) + ":" + std::to_string(len) + " not inside 1.." +
                std::to_string(n));
    VertexSet e;
    for (std::size_t v = start - 1; v < start - 1 + len; ++v) e.insert(static_cast<Vertex>(v));
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph hypercycle(const std::vector<std::size_t>& edge_sizes,
                      const std::vector<std::size_t>& overlap_sizes) {
  const std::size_t c = edge_sizes.size();
  require(c >= 3, "hypercycle: need at least three edges");
  require(overlap_sizes.size() == c, "hypercycle: need one overlap size per edge");
  std::vector<std::size_t> priv(c);
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t before = overlap_sizes[(i + c - 1) % c];
    require(overlap_sizes[i] >= 1, "hypercycle: overlaps must be nonempty");
    require(edge_sizes[i] >= before + overlap_sizes[i],
            "hypercycle: edge " + std::to_string(i + 1) + " is smaller than its two overlaps");
    priv[i] = edge_sizes[i] - before - overlap_sizes[i];
  }
  // start[i] = first label of P_i; O_i follows P_i
  std::vector<std::size_t> start(c);
  std::size_t next = 0;
  for (std::size_t i = 0; i < c; ++i) {
    start[i] = next;
    next += priv[i] + overlap_sizes[i];
  }
  auto block = [](VertexSet& e, std::size_t from, std::size_t len) {
    for (std::size_t v = from; v < from + len; ++v) e.insert(static_cast<Vertex>(v));
  };
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < c; ++i) {
    const std::size_t p = (i + c - 1) % c;
    VertexSet e;
    block(e, start[p] + priv[p], overlap_sizes[p]);
    block(e, start[i], priv[i] + overlap_sizes[i]);
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(next, std::move(edges));
}

Hypergraph tight_cycle(std::size_t n, std::size_t k, std::size_t t) {
  require(t >= 1 && t < k && k <= n, "tight cycle: need 1 <= t < k <= n");
  const std::size_t step = k - t;
  require(n % step == 0, "tight cycle: k - t must divide n");
  std::vector<VertexSet> edges;
  for (std::size_t i = 0; i < n / step; ++i) {
    VertexSet e;
    for (std::size_t j = 0; j < k; ++j) e.insert(static_cast<Vertex>((i * step + j) % n));
    edges.push_back(std::move(e));
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph augmented_complete(std::size_t n, std::size_t k) {
  require(k >= 2 && k <= n, "augmented complete: need 2 <= k <= n");
  const Hypergraph base = complete(n - 1, k - 1);
  std::vector<VertexSet> edges;
  for (const auto& e : base.edges()) {
    VertexSet f = e;
    f.insert(static_cast<Vertex>(n - 1));
    edges.push_back(std::move(f));
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph infection_one_extension(const Hypergraph& h) {
  const auto report = structure(h);
  require(!h.is_trivial() && report.uniform_size.has_value(),
          "extension: need a k-uniform hypergraph with at least one edge");
  const std::size_t k = *report.uniform_size;
  require(k >= 3, "extension: need k >= 3");
  const std::size_t width = k - 1;

  std::vector<VertexSet> edges = h.edges();
  std::size_t n = h.vertex_count();
  std::vector<Vertex> layer(n);
  std::iota(layer.begin(), layer.end(), Vertex{0});
  while (true) {
    const std::size_t blocks = (layer.size() + width - 1) / width;
    std::vector<Vertex> fresh;
    for (std::size_t b = 0; b < blocks; ++b) {
      VertexSet e;
      for (std::size_t j = b * width; j < std::min(layer.size(), (b + 1) * width); ++j) {
        e.insert(layer[j]);
      }
      // pad a short block: same layer first, then the lowest labels overall
      for (Vertex v : layer) {
        if (e.size() == width) break;
        e.insert(v);
      }
      for (Vertex v = 0; e.size() < width; ++v) e.insert(v);
      const auto f = static_cast<Vertex>(n++);
      e.insert(f);
      fresh.push_back(f);
      edges.push_back(std::move(e));
    }
    if (blocks == 1) break;
    layer = std::move(fresh);
  }
  return Hypergraph::build(n, std::move(edges));
}

Hypergraph trivial(std::size_t n) {
  require(n >= 1, "trivial: need n >= 1");
  return Hypergraph::build(n, std::vector<VertexSet>{});
}

Hypergraph generate(const FamilySpec& spec) {
  struct Visitor {
    Hypergraph operator()(const Complete& s) const { return complete(s.n, s.k); }
    Hypergraph operator()(const Multipartite& s) const { return complete_multipartite(s.parts); }
    Hypergraph operator()(const Flower& s) const { return flower(s.core_size, s.petal_extra_sizes); }
    Hypergraph operator()(const Interval& s) const { return interval(s.n, s.intervals); }
    Hypergraph operator()(const Hypercycle& s) const {
      return hypercycle(s.edge_sizes, s.overlap_sizes);
    }
    Hypergraph operator()(const TightCycle& s) const { return tight_cycle(s.n, s.k, s.t); }
    Hypergraph operator()(const AugmentedComplete& s) const {
      return augmented_complete(s.n, s.k);
    }
    Hypergraph operator()(const Trivial& s) const { return trivial(s.n); }
  };
  return std::visit(Visitor{}, spec);
}

std::string describe(const FamilySpec& spec) {
  struct Visitor {
    std::string operator()(const Complete& s) const {
      return "complete(" + std::to_string(s.n) + "," + std::to_string(s.k) + ")";
    }
    std::string operator()(const Multipartite& s) const {
      return "multipartite(" + join(s.parts) + ")";
    }
    std::string operator()(const Flower& s) const {
      return "flower(" + std::to_string(s.core_size) + ";" + join(s.petal_extra_sizes) + ")";
    }
    std::string operator()(const Interval& s) const {
      std::string out = "interval(" + std::to_string(s.n);
      for (auto [a, l] : s.intervals) out += ";" + std::to_string(a) + ":" + std::to_string(l);
      return out + ")";
    }
    std::string operator()(const Hypercycle& s) const {
      return "hypercycle(" + join(s.edge_sizes) + ";" + join(s.overlap_sizes) + ")";
    }
    std::string operator()(const TightCycle& s) const {
      return "tight_cycle(" + std::to_string(s.n) + "," + std::to_string(s.k) + "," +
             std::to_string(s.t) + ")";
    }
    std::string operator()(const AugmentedComplete& s) const {
      return "augmented_complete(" + std::to_string(s.n) + "," + std::to_string(s.k) + ")";
    }
    std::string operator()(const Trivial& s) const {
      return "trivial(" + std::to_string(s.n) + ")";
    }
  };
  return std::visit(Visitor{}, spec);
}

}  // namespace hyperinfect
