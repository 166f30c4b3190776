#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

namespace hyperinfect {

/// Internal vertex label. External I/O is 1-based; everything in the library
/// is 0-based.
using Vertex = std::uint32_t;

/// Dynamic bitset over vertex labels.
///
/// Storage is normalized (no trailing zero words) so equality is structural.
/// Ordering is lexicographic on the ascending member sequence, which is the
/// order used for witness tie-breaking and canonical edge lists.
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;
    const_iterator(const std::vector<std::uint64_t>* words, std::size_t word,
                   std::uint64_t rest)
        : words_(words), word_(word), rest_(rest) {
      settle();
    }

    Vertex operator*() const {
      return static_cast<Vertex>(word_ * 64 + std::countr_zero(rest_));
    }
    const_iterator& operator++() {
      rest_ &= rest_ - 1;
      settle();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const {
      return word_ == other.word_ && rest_ == other.rest_;
    }

   private:
    void settle() {
      while (rest_ == 0 && words_ != nullptr && word_ + 1 < words_->size()) {
        ++word_;
        rest_ = (*words_)[word_];
      }
      if (rest_ == 0 && words_ != nullptr) word_ = words_->size();
    }

    const std::vector<std::uint64_t>* words_ = nullptr;
    std::size_t word_ = 0;
    std::uint64_t rest_ = 0;
  };

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> members);
  explicit VertexSet(std::span<const Vertex> members);

  /// {0, 1, ..., n-1}
  static VertexSet range(std::size_t n);

  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const;

  std::size_t size() const;
  bool empty() const { return words_.empty(); }
  Vertex front() const;  // smallest member; precondition: !empty()
  Vertex back() const;   // largest member; precondition: !empty()

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  bool operator==(const VertexSet& other) const = default;
  std::strong_ordering operator<=>(const VertexSet& other) const;

  const_iterator begin() const {
    return words_.empty() ? end() : const_iterator(&words_, 0, words_[0]);
  }
  const_iterator end() const { return const_iterator(&words_, words_.size(), 0); }

  std::vector<Vertex> members() const;
  /// Members shifted to 1-based labels.
  std::vector<Vertex> labels() const;
  /// "{1,2,5}" with 1-based labels.
  std::string to_string() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim();

  std::vector<std::uint64_t> words_;
};

}  // namespace hyperinfect
