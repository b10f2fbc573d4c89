#ifndef GEMCOLOR_VERTEX_SET_HPP
#define GEMCOLOR_VERTEX_SET_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <vector>

namespace gemcolor {

using Vertex = int;

/// Fixed-capacity bit-vector over the vertices 0..universe-1 of a graph.
///
/// Storage is inline (no allocation) so sets are cheap to copy inside the
/// branch-and-bound searches. Only the first words_for(universe) words are
/// ever touched, which keeps n <= 64 on a single machine word.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 512;
  static constexpr int kWordBits = 64;
  static constexpr int kMaxWords = kMaxVertices / kWordBits;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const VertexSet* set, Vertex v) : set_(set), v_(v) {}
    Vertex operator*() const { return v_; }
    Iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const Iterator& other) const { return v_ == other.v_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex v_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);
  /// {lo, lo+1, ..., hi-1}
  static VertexSet range(int universe, Vertex lo, Vertex hi);

  int universe() const { return universe_; }
  int word_count() const { return words_for(universe_); }

  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ &&
           ((words_[v / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  int size() const;
  bool empty() const;
  /// Least member, or -1.
  Vertex first() const;
  /// Least member greater than v, or -1.
  Vertex next(Vertex v) const;
  /// Greatest member, or -1.
  Vertex last() const;

  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  /// Complement relative to the universe.
  VertexSet complement() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<Vertex> to_vector() const;

  std::uint64_t word(int i) const { return words_[i]; }

  static constexpr int words_for(int universe) {
    return (universe + kWordBits - 1) / kWordBits;
  }

 private:
  void check_member(Vertex v) const;

  std::int32_t universe_ = 0;
  std::array<std::uint64_t, kMaxWords> words_{};
};

}  // namespace gemcolor

#endif  // GEMCOLOR_VERTEX_SET_HPP
