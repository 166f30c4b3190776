#include "hyperinfect/vertex_set.hpp"

#include <algorithm>
#include <sstream>

namespace hyperinfect {

VertexSet::VertexSet(std::initializer_list<Vertex> members) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::span<const Vertex> members) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::range(std::size_t n) {
  VertexSet s;
  if (n == 0) return s;
  s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
  if (n % 64 != 0) s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  return s;
}

void VertexSet::insert(Vertex v) {
  const std::size_t w = v / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(Vertex v) {
  const std::size_t w = v / 64;
  if (w >= words_.size()) return;
  words_[w] &= ~(std::uint64_t{1} << (v % 64));
  trim();
}

bool VertexSet::contains(Vertex v) const {
  const std::size_t w = v / 64;
  return w < words_.size() && ((words_[w] >> (v % 64)) & 1U) != 0;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

Vertex VertexSet::front() const { return *begin(); }

Vertex VertexSet::back() const {
  const std::uint64_t last = words_.back();
  return static_cast<Vertex>((words_.size() - 1) * 64 + 63 - std::countl_zero(last));
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  if (words_.size() > other.words_.size()) return false;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  if (words_.size() > other.words_.size()) words_.resize(other.words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  trim();
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  trim();
  return *this;
}

std::strong_ordering VertexSet::operator<=>(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  const auto a_end = end();
  const auto b_end = other.end();
  for (; a != a_end && b != b_end; ++a, ++b) {
    if (*a != *b) return *a <=> *b;
  }
  if (a == a_end && b == b_end) return std::strong_ordering::equal;
  return a == a_end ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<Vertex> VertexSet::members() const { return {begin(), end()}; }

std::vector<Vertex> VertexSet::labels() const {
  std::vector<Vertex> out;
  for (Vertex v : *this) out.push_back(v + 1);
  return out;
}

std::string VertexSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (Vertex v : *this) {
    if (!first) os << ',';
    os << v + 1;
    first = false;
  }
  os << '}';
  return os.str();
}

void VertexSet::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

}  // namespace hyperinfect
