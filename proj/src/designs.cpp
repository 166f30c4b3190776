#include "hyperinfect/designs.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "hyperinfect/combinatorics.hpp"
#include "hyperinfect/error.hpp"
#include "hyperinfect/infection.hpp"

namespace hyperinfect {
namespace {

constexpr std::size_t kMaxPoints = 4096;
constexpr std::uint64_t kMaxSubsets = std::uint64_t{1} << 24;

// base-q code of a coordinate vector
std::size_t encode(const std::vector<std::size_t>& x, std::size_t q) {
  std::size_t code = 0;
  for (auto c : x) code = code * q + c;
  return code;
}

std::vector<std::size_t> normalize(std::vector<std::size_t> x, std::size_t q) {
  std::size_t lead = 0;
  for (auto c : x) {
    if (c != 0) {
      lead = c;
      break;
    }
  }
  // inverse of lead mod q by search; q is small
  std::size_t inv = 1;
  while ((inv * lead) % q != 1) ++inv;
  for (auto& c : x) c = (c * inv) % q;
  return x;
}

}  // namespace

bool is_prime(std::size_t q) {
  if (q < 2) return false;
  for (std::size_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

ProjectiveSpace projective_space(std::size_t n, std::size_t q) {
  if (n < 2) throw InvalidInput("pg: dimension must be at least 2");
  if (!is_prime(q)) throw InvalidInput("pg: q must be prime (prime powers are not supported)");
  std::size_t count = 0;
  for (std::size_t i = 0, p = 1; i <= n; ++i, p *= q) {
    count += p;
    if (count > kMaxPoints) throw InvalidInput("pg: too many points");
  }

  std::vector<std::vector<std::size_t>> points;
  const std::size_t dim = n + 1;
  // Odometer over all of F_q^{n+1} in lex order, keeping normalized vectors.
  std::vector<std::size_t> x(dim, 0);
  while (true) {
    std::size_t i = dim;
    while (i > 0 && ++x[i - 1] == q) x[--i] = 0;
    if (i == 0) break;
    const auto lead = std::find_if(x.begin(), x.end(), [](std::size_t c) { return c != 0; });
    if (*lead == 1) points.push_back(x);
  }
  std::unordered_map<std::size_t, Vertex> index;
  for (std::size_t i = 0; i < points.size(); ++i) {
    index[encode(points[i], q)] = static_cast<Vertex>(i);
  }

  std::vector<VertexSet> lines;
  const std::size_t np = points.size();
  std::vector<bool> done(np * np, false);
  for (std::size_t a = 0; a < np; ++a) {
    for (std::size_t b = a + 1; b < np; ++b) {
      if (done[a * np + b]) continue;
      VertexSet line{static_cast<Vertex>(a)};
      for (std::size_t c = 0; c < q; ++c) {
        std::vector<std::size_t> y(dim);
        for (std::size_t i = 0; i < dim; ++i) y[i] = (points[b][i] + c * points[a][i]) % q;
        line.insert(index.at(encode(normalize(y, q), q)));
      }
      for (Vertex u : line) {
        for (Vertex v : line) done[u * np + v] = true;
      }
      lines.push_back(std::move(line));
    }
  }
  auto design = Hypergraph::build(np, std::move(lines));
  return ProjectiveSpace{n, q, std::move(points), std::move(design)};
}

Hypergraph pg_design(std::size_t n, std::size_t q) { return projective_space(n, q).design; }

DesignCheck is_t_design(const Hypergraph& h, std::size_t t) {
  const auto report = structure(h);
  if (h.is_trivial() || !report.uniform_size) {
    throw InvalidInput("design check needs a uniform hypergraph with at least one edge");
  }
  const std::size_t n = h.vertex_count();
  if (t < 1 || t > n) throw InvalidInput("design check needs 1 <= t <= n");
  const std::size_t k = *report.uniform_size;
  if (binomial(n, t) > kMaxSubsets || binomial(k, t) * h.edge_count() > kMaxSubsets) {
    throw InvalidInput("design check: too many t-subsets");
  }

  std::map<VertexSet, std::size_t> count;
  for (const auto& e : h.edges()) {
    if (e.size() < t) continue;
    const std::vector<Vertex> members = e.members();
    std::vector<std::uint32_t> c = unrank_combination(0, static_cast<std::uint32_t>(k),
                                                      static_cast<std::uint32_t>(t));
    do {
      VertexSet s;
      for (auto i : c) s.insert(members[i]);
      ++count[s];
    } while (next_combination(c, static_cast<std::uint32_t>(k)));
  }

  DesignCheck out;
  std::vector<std::uint32_t> c = unrank_combination(0, static_cast<std::uint32_t>(n),
                                                    static_cast<std::uint32_t>(t));
  bool first = true;
  do {
    VertexSet s;
    for (auto v : c) s.insert(v);
    const auto it = count.find(s);
    const std::size_t mult = it == count.end() ? 0 : it->second;
    if (first) {
      out.lambda = mult;
      first = false;
    } else if (mult != out.lambda) {
      out.witness = s;
      out.witness_multiplicity = mult;
      out.lambda = 0;
      return out;
    }
  } while (next_combination(c, static_cast<std::uint32_t>(n)));
  out.is_design = true;
  return out;
}

std::size_t design_block_count(std::size_t n, std::size_t k, std::size_t t, std::size_t s) {
  if (s > t || t > k || k > n) throw InvalidInput("design_block_count needs s <= t <= k <= n");
  return static_cast<std::size_t>(binomial(n - s, t - s) / binomial(k - s, t - s));
}

SubdesignResult derived_subdesign_check(const Hypergraph& h, const VertexSet& w, std::size_t t) {
  const DesignCheck d = is_t_design(h, t);
  if (!d.is_design || d.lambda != 1) {
    throw InvalidInput("derived sub-design check needs a t-(n,k,1) design");
  }
  SubdesignResult out;
  out.derived = derived_set(h, w);
  if (out.derived.empty()) {
    out.verdict = SubdesignVerdict::Trivial;
    return out;
  }
  const Hypergraph sub = induced(h, out.derived).graph;
  out.induced_edges = sub.edge_count();
  if (sub.is_trivial()) {
    out.verdict = SubdesignVerdict::Trivial;
  } else if (sub.edge_count() == 1) {
    out.verdict = SubdesignVerdict::SingleEdge;
  } else if (t <= sub.vertex_count()) {
    const DesignCheck s = is_t_design(sub, t);
    out.verdict = s.is_design && s.lambda == 1 ? SubdesignVerdict::Design : SubdesignVerdict::Violation;
  }
  return out;
}

const char* to_string(SubdesignVerdict v) {
  switch (v) {
    case SubdesignVerdict::Trivial:
      return "trivial";
    case SubdesignVerdict::SingleEdge:
      return "single_edge";
    case SubdesignVerdict::Design:
      return "design";
    case SubdesignVerdict::Violation:
      return "violation";
  }
  return "unknown";
}

}  // namespace hyperinfect
