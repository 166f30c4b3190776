#pragma once

// Fixed-width bitmask closure engine used by the solver hot loops.
// Not part of the installed interface.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include "hyperinfect/error.hpp"
#include <vector>

#include "hyperinfect/hypergraph.hpp"

namespace hyperinfect::detail {

template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> w{};

  void set(Vertex v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }
  bool test(Vertex v) const { return ((w[v / 64] >> (v % 64)) & 1U) != 0; }
  bool none() const {
    for (auto x : w) {
      if (x != 0) return false;
    }
    return true;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += std::popcount(x);
    return c;
  }
  Vertex lowest() const {
    for (std::size_t i = 0; i < W; ++i) {
      if (w[i] != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(w[i]));
    }
    return 0;
  }
  // a \ b == empty
  bool subset_of(const Bits& b) const {
    for (std::size_t i = 0; i < W; ++i) {
      if ((w[i] & ~b.w[i]) != 0) return false;
    }
    return true;
  }
  Bits operator&(const Bits& b) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] & b.w[i];
    return r;
  }
  Bits operator|(const Bits& b) const {
    Bits r;
    for (std::size_t i = 0; i < W; ++i) r.w[i] = w[i] | b.w[i];
    return r;
  }
  Bits& operator|=(const Bits& b) {
    for (std::size_t i = 0; i < W; ++i) w[i] |= b.w[i];
    return *this;
  }
  bool operator==(const Bits&) const = default;

  static Bits from(const VertexSet& s) {
    Bits r;
    for (Vertex v : s) r.set(v);
    return r;
  }
  VertexSet to_set() const {
    VertexSet s;
    for (std::size_t i = 0; i < W; ++i) {
      for (auto x = w[i]; x != 0; x &= x - 1) {
        s.insert(static_cast<Vertex>(i * 64 + std::countr_zero(x)));
      }
    }
    return s;
  }
};

/// Edge masks plus per-vertex incidence, ready for repeated closures.
template <std::size_t W>
class Engine {
 public:
  using Mask = Bits<W>;

  explicit Engine(const Hypergraph& h) : n_(h.vertex_count()), incidence_(h.vertex_count()) {
    edges_.reserve(h.edge_count());
    for (std::size_t i = 0; i < h.edge_count(); ++i) {
      edges_.push_back(Mask::from(h.edge(i)));
      for (Vertex v : h.edge(i)) incidence_[v].push_back(static_cast<std::uint32_t>(i));
    }
    for (Vertex v = 0; v < n_; ++v) all_.set(v);
  }

  std::size_t vertex_count() const { return n_; }
  const Mask& all() const { return all_; }

  /// Maximal-witness fixpoint. `m` is the minimum witness size.
  Mask closure(Mask infected, int m) const {
    bool changed = true;
    while (changed && !(infected == all_)) {
      changed = false;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Mask& e = edges_[i];
        if (e.subset_of(infected)) continue;
        const Mask witness = e & infected;
        if (witness.none() || witness.count() < m) continue;
        if (fires(witness, e, infected)) {
          infected |= e;
          changed = true;
        }
      }
    }
    return infected;
  }

  bool infects_all(const Mask& seed, int m) const { return closure(seed, m) == all_; }

 private:
  // Every edge containing the witness must have its uninfected part inside e.
  bool fires(const Mask& witness, const Mask& e, const Mask& infected) const {
    const Mask covered = e | infected;
    for (std::uint32_t j : incidence_[witness.lowest()]) {
      const Mask& f = edges_[j];
      if (witness.subset_of(f) && !f.subset_of(covered)) return false;
    }
    return true;
  }

  std::size_t n_;
  std::vector<Mask> edges_;
  std::vector<std::vector<std::uint32_t>> incidence_;
  Mask all_{};
};

inline constexpr std::size_t kMaxEngineVertices = 1024;

/// Calls fn(engine) with the narrowest engine that fits h.
template <typename Fn>
decltype(auto) with_engine(const Hypergraph& h, Fn&& fn) {
  const std::size_t n = h.vertex_count();
  if (n <= 64) return fn(Engine<1>(h));
  if (n <= 128) return fn(Engine<2>(h));
  if (n <= 256) return fn(Engine<4>(h));
  if (n <= kMaxEngineVertices) return fn(Engine<16>(h));
  throw InvalidInput("closure engine supports at most 1024 vertices");
}

}  // namespace hyperinfect::detail
