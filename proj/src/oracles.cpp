#include "hyperinfect/oracles.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "hyperinfect/error.hpp"
#include "hyperinfect/infection.hpp"

namespace hyperinfect {

std::size_t zero_forcing_oracle(const Hypergraph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n > 20) throw InvalidInput("zero_forcing_oracle supports at most 20 vertices");
  std::vector<std::uint32_t> nbr(n, 0);
  for (const auto& e : graph.edges()) {
    if (e.size() != 2) throw InvalidInput("zero_forcing_oracle needs a simple graph");
    const Vertex a = e.front();
    const Vertex b = e.back();
    nbr[a] |= 1U << b;
    nbr[b] |= 1U << a;
  }
  const std::uint32_t all = (1U << n) - 1;
  auto forces_all = [&](std::uint32_t blue) {
    bool changed = true;
    while (changed && blue != all) {
      changed = false;
      for (std::size_t v = 0; v < n; ++v) {
        if (((blue >> v) & 1U) == 0) continue;
        const std::uint32_t white = nbr[v] & ~blue;
        if (std::popcount(white) == 1) {
          blue |= white;
          changed = true;
        }
      }
    }
    return blue == all;
  };
  std::size_t best = n;
  for (std::uint32_t s = 0; s <= all; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size < best && forces_all(s)) best = size;
  }
  return best;
}

std::size_t flat_infection_number(const Hypergraph& h, int m, bool literal) {
  const std::size_t n = h.vertex_count();
  if (n > (literal ? 16U : 24U)) throw InvalidInput("flat_infection_number: too many vertices");
  std::size_t best = n;
  const std::uint32_t all = (1U << n) - 1;
  for (std::uint32_t s = 0; s < all; ++s) {
    const auto size = static_cast<std::size_t>(std::popcount(s));
    if (size >= best) continue;
    VertexSet seed;
    for (std::uint32_t x = s; x != 0; x &= x - 1) seed.insert(static_cast<Vertex>(std::countr_zero(x)));
    const VertexSet fin = literal ? closure_oracle(h, seed, m) : closure(h, seed, m).final;
    if (fin.size() == n) best = size;
  }
  return best;
}

}  // namespace hyperinfect
